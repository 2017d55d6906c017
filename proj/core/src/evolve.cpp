#include "twostage/evolve.hpp"

namespace twostage {

Configuration canonical_initial(const Params& p, Configuration c) {
  if (p.contact_mode)
    for (auto& s : c.states)
      if (s == SiteState::Juvenile) s = SiteState::Mature;
  return c;
}

Trajectory evolve_forward(const Configuration& xi0, const EventSet& es,
                          double until) {
  Trajectory tr;
  tr.initial = canonical_initial(es.params, xi0);
  tr.final = evolve_forward_observe(
      xi0, es, until, [&tr](double t, std::int32_t site, SiteState from,
                            SiteState to) {
        tr.changes.push_back(Change{t, site, from, to});
      });
  return tr;
}

Trajectory evolve_dual(const Configuration& zeta0, const EventSet& es,
                       double until) {
  Trajectory tr;
  tr.initial = canonical_initial(es.params, zeta0);
  tr.final = evolve_dual_observe(
      zeta0, es, until, [&tr](double t, std::int32_t site, SiteState from,
                              SiteState to) {
        tr.changes.push_back(Change{t, site, from, to});
      });
  return tr;
}

bool check_duality(const Configuration& xi0, const Configuration& zeta0,
                   const EventSet& es, double until) {
  auto noop = [](double, std::int32_t, SiteState, SiteState) {};
  const Configuration xi_t = evolve_forward_observe(xi0, es, until, noop);
  const Configuration zeta_t = evolve_dual_observe(zeta0, es, until, noop);
  return compatible(xi_t, zeta0) == compatible(zeta_t, xi0);
}

}  // namespace twostage
