#include "twostage/configuration.hpp"

#include <algorithm>
#include <stdexcept>

#include "twostage/graph.hpp"

namespace twostage {

namespace {
void require_same_length(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("configuration length mismatch");
}
}  // namespace

Configuration join(const Configuration& a, const Configuration& b) {
  require_same_length(a, b);
  Configuration out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = std::max(a[i], b[i]);
  return out;
}

bool leq(const Configuration& a, const Configuration& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool compatible(const Configuration& xi, const Configuration& zeta) {
  require_same_length(xi, zeta);
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (zeta[i] == SiteState::Mature && xi[i] != SiteState::Vacant) return true;
    if (zeta[i] == SiteState::Juvenile && xi[i] == SiteState::Mature) return true;
  }
  return false;
}

Configuration all_vacant(const FiniteGraph& g) {
  return Configuration(static_cast<std::size_t>(g.n));
}

Configuration all_mature(const FiniteGraph& g) {
  return Configuration(static_cast<std::size_t>(g.n), SiteState::Mature);
}

Configuration single_site(const FiniteGraph& g, std::int32_t x, SiteState s) {
  if (x < 0 || x >= g.n)
    throw std::invalid_argument("site index out of range");
  Configuration c(static_cast<std::size_t>(g.n));
  c[static_cast<std::size_t>(x)] = s;
  return c;
}

bool is_empty(const Configuration& c) {
  return std::all_of(c.states.begin(), c.states.end(),
                     [](SiteState s) { return s == SiteState::Vacant; });
}

std::size_t active_count(const Configuration& c) {
  return static_cast<std::size_t>(
      std::count_if(c.states.begin(), c.states.end(),
                    [](SiteState s) { return s != SiteState::Vacant; }));
}

std::string to_string(const Configuration& c) {
  std::string s(c.size(), '0');
  for (std::size_t i = 0; i < c.size(); ++i)
    s[i] = static_cast<char>('0' + static_cast<int>(c[i]));
  return s;
}

Configuration configuration_from_string(const std::string& s) {
  Configuration c(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '2')
      throw std::invalid_argument("configuration string must be over {0,1,2}");
    c[i] = static_cast<SiteState>(s[i] - '0');
  }
  return c;
}

}  // namespace twostage
