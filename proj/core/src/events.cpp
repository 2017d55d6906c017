#include "twostage/events.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twostage/rng.hpp"

namespace twostage {

void Params::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string(name) +
                                  " must be finite and nonnegative");
  };
  check(lambda, "lambda");
  check(gamma, "gamma");
  check(delta, "delta");
  if (contact_mode && gamma != 0.0)
    throw std::invalid_argument(
        "contact_mode represents gamma = infinity; finite gamma must be 0");
}

std::size_t EventSet::count(EventKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(events.begin(), events.end(),
                    [kind](const Event& e) { return e.kind == kind; }));
}

std::vector<double> EventSet::site_times(EventKind kind, std::int32_t site) const {
  std::vector<double> out;
  for (const Event& e : events)
    if (e.kind == kind && e.site == site && e.kind != EventKind::Transmission)
      out.push_back(e.time);
  return out;
}

std::vector<double> EventSet::edge_times(std::int32_t source,
                                         std::int32_t target) const {
  std::vector<double> out;
  for (const Event& e : events)
    if (e.kind == EventKind::Transmission && e.source == source &&
        e.site == target)
      out.push_back(e.time);
  return out;
}

double expected_event_count(const FiniteGraph& g, const Params& p,
                            double horizon) {
  const double site_rate =
      1.0 + p.delta + (p.contact_mode ? 0.0 : p.gamma);
  return horizon * (static_cast<double>(g.n) * site_rate +
                    static_cast<double>(g.directed_edge_count()) * p.lambda);
}

namespace {

// Appends one Poisson stream of `kind` at `rate` on (0, horizon).
void append_stream(std::vector<Event>& out, std::mt19937_64& gen, double rate,
                   double horizon, EventKind kind, std::int32_t site,
                   std::int32_t source) {
  if (rate <= 0.0) return;
  double t = exponential(gen, rate);
  while (t < horizon) {
    out.push_back(Event{t, kind, site, source});
    t += exponential(gen, rate);
  }
}

void append_all_streams(std::vector<Event>& out, const FiniteGraph& g,
                        std::mt19937_64& gen, double horizon, EventKind kind,
                        double rate) {
  if (kind == EventKind::Transmission) {
    for (std::int32_t y = 0; y < g.n; ++y)
      for (std::int32_t x : g.adjacency[y])
        append_stream(out, gen, rate, horizon, kind, x, y);
  } else {
    for (std::int32_t x = 0; x < g.n; ++x)
      append_stream(out, gen, rate, horizon, kind, x, -1);
  }
}

void check_cap(double expected, double cap) {
  if (expected > cap)
    throw std::length_error("expected event count " + std::to_string(expected) +
                            " exceeds cap " + std::to_string(cap));
}

}  // namespace

EventSet sample_events(const FiniteGraph& g, const Params& p, double horizon,
                       std::uint64_t seed, double max_expected_events) {
  p.validate();
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw std::invalid_argument("horizon must be positive and finite");
  check_cap(expected_event_count(g, p, horizon), max_expected_events);

  EventSet es;
  es.horizon = horizon;
  es.seed = seed;
  es.site_count = g.n;
  es.params = p;
  es.events.reserve(static_cast<std::size_t>(
      std::min(max_expected_events, expected_event_count(g, p, horizon) * 1.25)));

  auto gen = make_engine(seed);
  // Fixed stream order makes the set a deterministic function of the seed.
  append_all_streams(es.events, g, gen, horizon, EventKind::Death, 1.0);
  append_all_streams(es.events, g, gen, horizon, EventKind::JuvenileDeath,
                     p.delta);
  if (!p.contact_mode)
    append_all_streams(es.events, g, gen, horizon, EventKind::Maturation,
                       p.gamma);
  append_all_streams(es.events, g, gen, horizon, EventKind::Transmission,
                     p.lambda);

  std::sort(es.events.begin(), es.events.end(), event_before);
  return es;
}

EventSet augment_events(const EventSet& base, const FiniteGraph& g,
                        EventKind kind, double extra_rate, std::uint64_t seed,
                        double max_expected_events) {
  if (extra_rate < 0.0 || !std::isfinite(extra_rate))
    throw std::invalid_argument("extra_rate must be finite and nonnegative");
  if (g.n != base.site_count)
    throw std::invalid_argument("graph does not match event set");
  if (base.params.contact_mode && kind == EventKind::Maturation)
    throw std::invalid_argument("no maturation streams in contact_mode");

  const double streams =
      kind == EventKind::Transmission
          ? static_cast<double>(g.directed_edge_count())
          : static_cast<double>(g.n);
  check_cap(static_cast<double>(base.events.size()) +
                streams * extra_rate * base.horizon,
            max_expected_events);

  EventSet out = base;
  auto gen = make_engine(seed);
  append_all_streams(out.events, g, gen, out.horizon, kind, extra_rate);
  std::sort(out.events.begin(), out.events.end(), event_before);

  switch (kind) {
    case EventKind::Transmission: out.params.lambda += extra_rate; break;
    case EventKind::Maturation: out.params.gamma += extra_rate; break;
    case EventKind::JuvenileDeath: out.params.delta += extra_rate; break;
    case EventKind::Death: break;  // rate-1 deaths are not a parameter
  }
  return out;
}

}  // namespace twostage
