// Reading trajectories off a sampled event structure.  The forward process
// consumes events in increasing time order; the dual consumes the same
// events in decreasing order with the dual transition rules, which is what
// makes the compatibility identity hold pathwise, seed by seed.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "twostage/configuration.hpp"
#include "twostage/events.hpp"

namespace twostage {

struct Change {
  double time;
  std::int32_t site;
  SiteState from;
  SiteState to;
};

struct Trajectory {
  Configuration initial;
  std::vector<Change> changes;  // in application order
  Configuration final;
};

// In contact_mode the dynamics live on {0,2}; juveniles in an initial
// configuration are promoted to mature.  Identity otherwise.
Configuration canonical_initial(const Params& p, Configuration c);

namespace detail {

inline void require_window(const EventSet& es, const Configuration& c,
                           double until) {
  if (until > es.horizon)
    throw std::out_of_range("evolution time exceeds event horizon");
  if (static_cast<std::int32_t>(c.size()) != es.site_count)
    throw std::invalid_argument("configuration length does not match event set");
}

// Index of the first event with time > until.
inline std::size_t events_upto(const EventSet& es, double until) {
  std::size_t lo = 0, hi = es.events.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (es.events[mid].time <= until) lo = mid + 1;
    else hi = mid;
  }
  return lo;
}

}  // namespace detail

// Forward evolution with an observer called as on_change(time, site, from, to)
// for every applied change.  Stops early once the configuration empties; no
// event can re-activate an empty configuration.
template <class OnChange>
Configuration evolve_forward_observe(const Configuration& xi0,
                                     const EventSet& es, double until,
                                     OnChange&& on_change) {
  detail::require_window(es, xi0, until);
  Configuration c = canonical_initial(es.params, xi0);
  const bool contact = es.params.contact_mode;
  std::size_t active = active_count(c);
  const std::size_t end = detail::events_upto(es, until);

  for (std::size_t i = 0; i < end && active > 0; ++i) {
    const Event& e = es.events[i];
    SiteState& s = c[static_cast<std::size_t>(e.site)];
    const SiteState before = s;
    switch (e.kind) {
      case EventKind::Death:
        s = SiteState::Vacant;
        break;
      case EventKind::JuvenileDeath:
        if (s == SiteState::Juvenile) s = SiteState::Vacant;
        break;
      case EventKind::Maturation:
        if (s == SiteState::Juvenile) s = SiteState::Mature;
        break;
      case EventKind::Transmission:
        if (c[static_cast<std::size_t>(e.source)] == SiteState::Mature &&
            s == SiteState::Vacant)
          s = contact ? SiteState::Mature : SiteState::Juvenile;
        break;
    }
    if (s != before) {
      if (before == SiteState::Vacant) ++active;
      if (s == SiteState::Vacant) --active;
      on_change(e.time, e.site, before, s);
    }
  }
  return c;
}

// Dual (on-off process) evolution down the same events, from `until` to 0.
// Rules per event, reading the current dual state:
//   Death at x:          zeta(x) <- 0
//   JuvenileDeath at x:  2 -> 1          (switch-off; absent in contact_mode)
//   Maturation at x:     1 -> 2
//   Transmission y->x:   if zeta(x) = 2 then zeta(y) <- max(zeta(y), 1)
//                        (contact_mode: <- 2)
template <class OnChange>
Configuration evolve_dual_observe(const Configuration& zeta0,
                                  const EventSet& es, double until,
                                  OnChange&& on_change) {
  detail::require_window(es, zeta0, until);
  Configuration c = canonical_initial(es.params, zeta0);
  const bool contact = es.params.contact_mode;
  std::size_t active = active_count(c);
  const std::size_t end = detail::events_upto(es, until);

  for (std::size_t i = end; i-- > 0 && active > 0;) {
    const Event& e = es.events[i];
    std::int32_t changed = e.site;
    SiteState before, after;
    {
      SiteState& s = c[static_cast<std::size_t>(e.site)];
      before = s;
      switch (e.kind) {
        case EventKind::Death:
          s = SiteState::Vacant;
          break;
        case EventKind::JuvenileDeath:
          if (!contact && s == SiteState::Mature) s = SiteState::Juvenile;
          break;
        case EventKind::Maturation:
          if (s == SiteState::Juvenile) s = SiteState::Mature;
          break;
        case EventKind::Transmission:
          if (s == SiteState::Mature) {
            SiteState& src = c[static_cast<std::size_t>(e.source)];
            if (src == SiteState::Vacant) {
              changed = e.source;
              before = src;
              src = contact ? SiteState::Mature : SiteState::Juvenile;
            }
          }
          break;
      }
      after = c[static_cast<std::size_t>(changed)];
    }
    if (after != before) {
      if (before == SiteState::Vacant) ++active;
      if (after == SiteState::Vacant) --active;
      on_change(e.time, changed, before, after);
    }
  }
  return c;
}

// Trajectory-recording wrappers.
Trajectory evolve_forward(const Configuration& xi0, const EventSet& es,
                          double until);
Trajectory evolve_dual(const Configuration& zeta0, const EventSet& es,
                       double until);

// Pathwise duality check: compatible(xi_t, zeta_0) == compatible(zeta_t, xi_0)
// must hold for every seed; false indicates an engine defect.
bool check_duality(const Configuration& xi0, const Configuration& zeta0,
                   const EventSet& es, double until);

}  // namespace twostage
