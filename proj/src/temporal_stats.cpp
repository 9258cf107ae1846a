#include "tifo/temporal_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

#include "tifo/errors.hpp"
#include "tifo/ingest.hpp"

namespace tifo {

namespace {

double mean_of(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Population standard deviation.
double stddev_of(std::span<const double> v, double mu) {
    double ss = 0;
    for (double x : v) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(v.size()));
}

}  // namespace

double coefficient_of_variation(const InterEventTimes& taus) {
    if (taus.count() == 0)
        throw InsufficientEventsError("coefficient of variation needs at least 1 inter-event time");
    double mu = mean_of(taus.taus());
    double sigma = stddev_of(taus.taus(), mu);
    return sigma / mu;
}

double burstiness(const InterEventTimes& taus) {
    double r = coefficient_of_variation(taus);
    return (r - 1.0) / (r + 1.0);
}

double finite_size_burstiness(double r, std::size_t n) {
    if (n < 2)
        throw InsufficientEventsError("finite-size burstiness needs n >= 2, got n=" +
                                      std::to_string(n));
    double sp = std::sqrt(static_cast<double>(n) + 1.0);
    double sm = std::sqrt(static_cast<double>(n) - 1.0);
    double den = (sp - 2.0) * r + sm;
    if (std::abs(den) < 1e-12)
        throw DegenerateSequenceError("finite-size burstiness denominator vanishes at r=" +
                                      std::to_string(r) + ", n=" + std::to_string(n));
    return (sp * r - sm) / den;
}

double burstiness_finite(const InterEventTimes& taus) {
    if (taus.count() < 2)
        throw InsufficientEventsError("finite-size burstiness needs at least 2 inter-event times");
    return finite_size_burstiness(coefficient_of_variation(taus), taus.count());
}

std::optional<double> memory(const InterEventTimes& taus, std::size_t lag) {
    if (lag < 1) throw Error("memory lag must be >= 1");
    std::size_t n = taus.count();
    if (n <= lag)
        throw InsufficientEventsError("memory at lag " + std::to_string(lag) + " needs more than " +
                                      std::to_string(lag) + " inter-event times, got " +
                                      std::to_string(n));
    std::span<const double> all(taus.taus());
    auto head = all.subspan(0, n - lag);
    auto tail = all.subspan(lag, n - lag);
    double mu1 = mean_of(head), mu2 = mean_of(tail);
    double s1 = stddev_of(head, mu1), s2 = stddev_of(tail, mu2);
    if (s1 == 0.0 || s2 == 0.0) return std::nullopt;
    double acc = 0;
    for (std::size_t i = 0; i < head.size(); ++i) acc += (head[i] - mu1) * (tail[i] - mu2);
    double m = acc / (static_cast<double>(head.size()) * s1 * s2);
    return std::clamp(m, -1.0, 1.0);
}

BurstinessReport burstiness_report(const BinaryEventSeries& series, std::size_t lag) {
    InterEventTimes taus = extract_inter_event(series);
    if (taus.count() < 2)
        throw InsufficientEventsError("series '" + series.team_id + "'/" +
                                      std::string(to_string(series.emotion)) +
                                      " yields fewer than 2 inter-event times");
    BurstinessReport rep;
    rep.team_id = series.team_id;
    rep.emotion = series.emotion;
    rep.n_tau = taus.count();
    rep.mu_tau = mean_of(taus.taus());
    rep.sigma_tau = stddev_of(taus.taus(), rep.mu_tau);
    rep.r = rep.sigma_tau / rep.mu_tau;
    rep.b = (rep.r - 1.0) / (rep.r + 1.0);
    rep.b_n = finite_size_burstiness(rep.r, rep.n_tau);
    rep.lag = lag;
    rep.memory = rep.n_tau > lag ? memory(taus, lag) : std::nullopt;
    return rep;
}

}  // namespace tifo
