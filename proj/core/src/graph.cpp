#include "twostage/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace twostage {

std::int64_t FiniteGraph::directed_edge_count() const {
  std::int64_t total = 0;
  for (const auto& nb : adjacency) total += static_cast<std::int64_t>(nb.size());
  return total;
}

namespace {

std::int32_t recompute_max_degree(const FiniteGraph& g) {
  std::size_t m = 0;
  for (const auto& nb : g.adjacency) m = std::max(m, nb.size());
  return static_cast<std::int32_t>(m);
}

}  // namespace

FiniteGraph build_lattice(const LatticeSpec& spec, std::int64_t site_budget) {
  const int d = spec.dimension;
  const int L = spec.half_extent;
  const int r = spec.range;
  if (d < 1) throw std::invalid_argument("lattice dimension must be >= 1");
  if (L < 0) throw std::invalid_argument("lattice half_extent must be >= 0");
  if (r < 1) throw std::invalid_argument("lattice range must be >= 1");

  const std::int64_t side = 2 * static_cast<std::int64_t>(L) + 1;
  if (spec.boundary == Boundary::Torus && r >= side)
    throw std::invalid_argument(
        "torus range >= 2L+1: neighborhood wraps onto itself");

  std::int64_t n = 1;
  for (int i = 0; i < d; ++i) {
    if (n > site_budget / side + 1) n = site_budget + 1;  // saturate
    else n *= side;
    if (d * n > site_budget)
      throw std::invalid_argument("lattice exceeds site budget");
  }

  FiniteGraph g;
  g.n = static_cast<std::int32_t>(n);
  g.adjacency.resize(g.n);
  g.labels.resize(g.n);

  // Row-major index <-> coordinates, first coordinate most significant.
  std::vector<int> coord(d, -L);
  for (std::int32_t idx = 0; idx < g.n; ++idx) {
    g.labels[idx] = coord;
    for (int axis = d - 1; axis >= 0; --axis) {
      if (++coord[axis] <= L) break;
      coord[axis] = -L;
    }
  }

  // Neighborhood offsets: every nonzero o in [-r, r]^d (sup-norm <= r).
  std::vector<std::vector<int>> offsets;
  std::vector<int> off(d, -r);
  while (true) {
    const bool all_zero =
        std::all_of(off.begin(), off.end(), [](int v) { return v == 0; });
    if (!all_zero) offsets.push_back(off);
    int axis = d - 1;
    for (; axis >= 0; --axis) {
      if (++off[axis] <= r) break;
      off[axis] = -r;
    }
    if (axis < 0) break;
  }

  std::vector<int> target(d);
  for (std::int32_t idx = 0; idx < g.n; ++idx) {
    const auto& c = g.labels[idx];
    auto& nb = g.adjacency[idx];
    for (const auto& o : offsets) {
      bool inside = true;
      for (int i = 0; i < d; ++i) {
        int t = c[i] + o[i];
        if (spec.boundary == Boundary::Torus) {
          t = static_cast<int>(((t + L) % side + side) % side) - L;
        } else if (t < -L || t > L) {
          inside = false;
          break;
        }
        target[i] = t;
      }
      if (!inside) continue;
      std::int64_t tidx = 0;
      for (int i = 0; i < d; ++i) tidx = tidx * side + (target[i] + L);
      if (tidx != idx) nb.push_back(static_cast<std::int32_t>(tidx));
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());  // torus wrap collisions
  }

  g.max_degree = recompute_max_degree(g);
  return g;
}

FiniteGraph from_adjacency(std::vector<std::vector<std::int32_t>> lists) {
  FiniteGraph g;
  g.n = static_cast<std::int32_t>(lists.size());
  g.adjacency = std::move(lists);

  for (std::int32_t x = 0; x < g.n; ++x) {
    auto& nb = g.adjacency[x];
    std::sort(nb.begin(), nb.end());
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const std::int32_t y = nb[k];
      if (y == x)
        throw std::invalid_argument("self-loop at site " + std::to_string(x));
      if (y < 0 || y >= g.n)
        throw std::invalid_argument("neighbor index out of range at site " +
                                    std::to_string(x));
      if (k > 0 && nb[k - 1] == y)
        throw std::invalid_argument("duplicate neighbor " + std::to_string(y) +
                                    " at site " + std::to_string(x));
    }
  }
  for (std::int32_t x = 0; x < g.n; ++x) {
    for (std::int32_t y : g.adjacency[x]) {
      const auto& back = g.adjacency[y];
      if (!std::binary_search(back.begin(), back.end(), x))
        throw std::invalid_argument("asymmetric adjacency: " + std::to_string(x) +
                                    " lists " + std::to_string(y) +
                                    " but not vice versa");
    }
  }
  g.max_degree = recompute_max_degree(g);
  return g;
}

std::vector<std::int32_t> half_line_sites(const FiniteGraph& g) {
  if (!g.has_labels())
    throw std::invalid_argument("graph lacks coordinate labels");
  std::vector<std::int32_t> out;
  for (std::int32_t i = 0; i < g.n; ++i) {
    if (g.labels[i].size() != 1)
      throw std::invalid_argument("half_line_sites requires 1-d labels");
    if (g.labels[i][0] <= 0) out.push_back(i);
  }
  return out;
}

std::int32_t center_site(const FiniteGraph& g) {
  if (!g.has_labels())
    throw std::invalid_argument("graph lacks coordinate labels");
  for (std::int32_t i = 0; i < g.n; ++i) {
    const auto& c = g.labels[i];
    if (std::all_of(c.begin(), c.end(), [](int v) { return v == 0; })) return i;
  }
  throw std::invalid_argument("graph has no site at the coordinate origin");
}

std::int32_t find_site(const FiniteGraph& g, const std::vector<int>& coords) {
  for (std::int32_t i = 0; i < g.n; ++i)
    if (g.labels[i] == coords) return i;
  return -1;
}

void write_adjacency(std::ostream& os, const FiniteGraph& g) {
  os << "n=" << g.n << "\n";
  for (const auto& nb : g.adjacency) {
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (k > 0) os << ' ';
      os << nb[k];
    }
    os << "\n";
  }
}

FiniteGraph read_adjacency(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || header.rfind("n=", 0) != 0)
    throw std::invalid_argument("adjacency input missing n=<count> header");
  const long n = std::stol(header.substr(2));
  if (n < 0) throw std::invalid_argument("negative site count");
  std::vector<std::vector<std::int32_t>> lists(static_cast<std::size_t>(n));
  std::string line;
  for (long i = 0; i < n; ++i) {
    if (!std::getline(is, line))
      throw std::invalid_argument("adjacency input truncated at site " +
                                  std::to_string(i));
    std::istringstream ls(line);
    std::int32_t v;
    while (ls >> v) lists[i].push_back(v);
  }
  return from_adjacency(std::move(lists));
}

}  // namespace twostage
