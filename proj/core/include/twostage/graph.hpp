// Finite graphs the process lives on: lattice boxes/tori with range-r
// sup-norm neighborhoods, and validated user-supplied adjacency lists.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace twostage {

enum class Boundary { Box, Torus };

// d-dimensional lattice slab: sites are integer vectors with coordinates in
// [-half_extent, half_extent]; y is a neighbor of x iff 0 < ||y-x||_inf <= range.
struct LatticeSpec {
  int dimension = 1;
  int half_extent = 1;
  int range = 1;
  Boundary boundary = Boundary::Box;
};

struct FiniteGraph {
  std::int32_t n = 0;
  std::vector<std::vector<std::int32_t>> adjacency;  // sorted, per site
  std::int32_t max_degree = 0;
  // Lattice coordinates per site; empty for adjacency-built graphs.
  std::vector<std::vector<int>> labels;

  std::int64_t directed_edge_count() const;
  bool has_labels() const { return !labels.empty(); }
};

inline constexpr std::int64_t default_site_budget = 1 << 23;

// Sites are indexed row-major over coordinates (first coordinate most
// significant), coordinate c mapping to c + half_extent along each axis.
FiniteGraph build_lattice(const LatticeSpec& spec,
                          std::int64_t site_budget = default_site_budget);

// Validates symmetry, no self-loops, no duplicates; sorts neighbor lists.
FiniteGraph from_adjacency(std::vector<std::vector<std::int32_t>> lists);

// Indices of sites with coordinate <= 0 on a 1-d labelled graph.
std::vector<std::int32_t> half_line_sites(const FiniteGraph& g);

// Site with all coordinates zero on a labelled graph.
std::int32_t center_site(const FiniteGraph& g);

// Site index for a coordinate vector on a labelled graph; -1 if absent.
std::int32_t find_site(const FiniteGraph& g, const std::vector<int>& coords);

// Text format: header line "n=<count>", then one line of whitespace-separated
// neighbor indices per site (blank line for an isolated site).
void write_adjacency(std::ostream& os, const FiniteGraph& g);
FiniteGraph read_adjacency(std::istream& is);

}  // namespace twostage
