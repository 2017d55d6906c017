// Site states and configurations shared by the process and its dual, with
// the pointwise partial order, join, and the asymmetric compatibility
// relation the duality theorem is stated in.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twostage {

struct FiniteGraph;

// Per-site state, totally ordered Vacant < Juvenile < Mature.
enum class SiteState : std::uint8_t { Vacant = 0, Juvenile = 1, Mature = 2 };

struct Configuration {
  std::vector<SiteState> states;

  Configuration() = default;
  explicit Configuration(std::size_t n, SiteState fill = SiteState::Vacant)
      : states(n, fill) {}

  std::size_t size() const { return states.size(); }
  SiteState operator[](std::size_t i) const { return states[i]; }
  SiteState& operator[](std::size_t i) { return states[i]; }

  bool operator==(const Configuration&) const = default;
};

// Pointwise max.
Configuration join(const Configuration& a, const Configuration& b);

// true iff a(x) <= b(x) for every site.
bool leq(const Configuration& a, const Configuration& b);

// Compatibility of a forward configuration with a dual configuration:
// there is a site where (zeta = 2 and xi in {1,2}) or (zeta = 1 and xi = 2).
// Deliberately asymmetric; dual type 1 accepts only forward type 2.
bool compatible(const Configuration& xi, const Configuration& zeta);

Configuration all_vacant(const FiniteGraph& g);
Configuration all_mature(const FiniteGraph& g);
Configuration single_site(const FiniteGraph& g, std::int32_t x,
                          SiteState s = SiteState::Mature);

// true iff every site is vacant.
bool is_empty(const Configuration& c);

std::size_t active_count(const Configuration& c);

// Text form over {0,1,2} in site-index order, e.g. "00200".
std::string to_string(const Configuration& c);
Configuration configuration_from_string(const std::string& s);

}  // namespace twostage
