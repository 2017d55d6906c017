// The sampled spacetime event structure: independent Poisson streams per
// site (deaths at rate 1, juvenile deaths at rate delta, maturations at rate
// gamma) and per directed edge (transmissions at rate lambda), materialized
// and sorted on a horizon [0, T].  The forward process reads the events
// upward in time and the dual reads the same events downward, so one
// EventSet backs both.
#pragma once

#include <cstdint>
#include <vector>

#include "twostage/graph.hpp"

namespace twostage {

struct Params {
  double lambda = 0.0;  // transmission rate per directed edge
  double gamma = 0.0;   // maturation rate (ignored in contact_mode)
  double delta = 0.0;   // extra juvenile death rate
  // gamma = infinity: births produce mature sites directly and no maturation
  // streams exist (the classical contact process).
  bool contact_mode = false;

  static Params contact(double lambda, double delta = 0.0) {
    return Params{lambda, 0.0, delta, true};
  }

  void validate() const;
};

enum class EventKind : std::uint8_t {
  Death = 0,          // rate 1, kills juveniles and matures
  JuvenileDeath = 1,  // rate delta, kills juveniles only
  Maturation = 2,     // rate gamma, absent in contact_mode
  Transmission = 3,   // rate lambda per directed edge
};

struct Event {
  double time;
  EventKind kind;
  std::int32_t site;    // affected site (the target x for transmission)
  std::int32_t source;  // transmission source y; -1 for site events
};

// Fixed total order used to break (measure-zero) time ties so replay is
// deterministic in both directions.
inline bool event_before(const Event& a, const Event& b) {
  if (a.time != b.time) return a.time < b.time;
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.site != b.site) return a.site < b.site;
  return a.source < b.source;
}

struct EventSet {
  double horizon = 0.0;
  std::uint64_t seed = 0;
  std::int32_t site_count = 0;
  Params params;
  std::vector<Event> events;  // sorted by event_before

  std::size_t count(EventKind kind) const;
  // Times of one site stream / one directed-edge stream, ascending.
  std::vector<double> site_times(EventKind kind, std::int32_t site) const;
  std::vector<double> edge_times(std::int32_t source, std::int32_t target) const;
};

double expected_event_count(const FiniteGraph& g, const Params& p, double horizon);

inline constexpr double default_event_cap = 2e7;

// Deterministic function of (graph, params, horizon, seed).
EventSet sample_events(const FiniteGraph& g, const Params& p, double horizon,
                       std::uint64_t seed,
                       double max_expected_events = default_event_cap);

// Superposition coupling: adds an independent stream of `kind` at
// `extra_rate` (per site, or per directed edge for Transmission) on top of
// `base`, so the result's streams are supersets of the base streams.
EventSet augment_events(const EventSet& base, const FiniteGraph& g,
                        EventKind kind, double extra_rate, std::uint64_t seed,
                        double max_expected_events = default_event_cap);

}  // namespace twostage
