#pragma once

#include <cstddef>
#include <optional>

#include "tifo/types.hpp"

namespace tifo {

// Dispersion and correlation statistics of inter-event times. All
// standard deviations here are population ones (divisor n), matching the
// explicit sigma formula the statistics are defined with.

// r = sigma / mu. Throws InsufficientEventsError on an empty sequence.
double coefficient_of_variation(const InterEventTimes& taus);

// B = (sigma - mu) / (sigma + mu) = (r - 1) / (r + 1), in [-1, 1).
double burstiness(const InterEventTimes& taus);

// Finite-size correction evaluated directly from (r, n):
//   B_n = (sqrt(n+1) r - sqrt(n-1)) / ((sqrt(n+1) - 2) r + sqrt(n-1))
// n is the number of inter-event times; this function is the single
// place that convention lives. Throws InsufficientEventsError for n < 2
// and DegenerateSequenceError when the denominator is within 1e-12 of 0.
double finite_size_burstiness(double r, std::size_t n);

// B_n of a sequence, with n = taus.count().
double burstiness_finite(const InterEventTimes& taus);

// Lag-k memory: the correlation between tau_1..tau_{n-k} and
// tau_{k+1}..tau_n, each window centered and scaled by its own
// population statistics. nullopt when either window has zero variance.
// Throws InsufficientEventsError when n_tau <= lag.
std::optional<double> memory(const InterEventTimes& taus, std::size_t lag = 1);

// Bundles n_tau, mu, sigma, r, B, B_n and lag-k memory for one series.
// Requires the series to yield at least 2 inter-event times; memory is
// nullopt (not an error) when n_tau <= lag.
BurstinessReport burstiness_report(const BinaryEventSeries& series, std::size_t lag = 1);

}  // namespace tifo
