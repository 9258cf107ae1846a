#pragma once

// Shared fixtures and independent oracle implementations for the unit
// suite. The oracles deliberately avoid the library's own code paths
// (and Eigen): straightforward formulas, Gaussian elimination, and
// exhaustive path enumeration, so agreement is meaningful.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "tifo/types.hpp"

namespace testutil {

inline double oracle_mean(std::span<const double> v) {
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

// Population standard deviation (divisor n).
inline double oracle_stddev(std::span<const double> v) {
    const double m = oracle_mean(v);
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size()));
}

// Pearson correlation; the normalization convention cancels.
inline double oracle_pearson(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("bad windows");
    const double ma = oracle_mean(a), mb = oracle_mean(b);
    double num = 0, da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - ma) * (b[i] - mb);
        da += (a[i] - ma) * (a[i] - ma);
        db += (b[i] - mb) * (b[i] - mb);
    }
    return num / std::sqrt(da * db);
}

// Minimal warping-path cost by exhaustive recursion over the moves
// right/down/diagonal. Exponential; keep lengths small.
inline double oracle_dtw(std::span<const double> x, std::span<const double> y, std::size_t i = 0,
                         std::size_t j = 0) {
    const double cost = std::abs(x[i] - y[j]);
    const bool last_i = i + 1 == x.size(), last_j = j + 1 == y.size();
    if (last_i && last_j) return cost;
    double best = std::numeric_limits<double>::infinity();
    if (!last_i) best = std::min(best, oracle_dtw(x, y, i + 1, j));
    if (!last_j) best = std::min(best, oracle_dtw(x, y, i, j + 1));
    if (!last_i && !last_j) best = std::min(best, oracle_dtw(x, y, i + 1, j + 1));
    return cost + best;
}

// Least squares through explicit normal equations XtX b = Xty, solved
// by Gaussian elimination with partial pivoting. No Eigen involved.
inline std::vector<double> oracle_ols(const std::vector<std::vector<double>>& X,
                                      const std::vector<double>& y) {
    const std::size_t n = X.size(), p = X[0].size();
    std::vector<std::vector<double>> a(p, std::vector<double>(p + 1, 0.0));
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = 0; k < p; ++k)
            for (std::size_t i = 0; i < n; ++i) a[j][k] += X[i][j] * X[i][k];
        for (std::size_t i = 0; i < n; ++i) a[j][p] += X[i][j] * y[i];
    }
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < p; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        if (a[col][col] == 0) throw std::runtime_error("singular system");
        for (std::size_t r = 0; r < p; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (std::size_t k = col; k <= p; ++k) a[r][k] -= f * a[col][k];
        }
    }
    std::vector<double> beta(p);
    for (std::size_t j = 0; j < p; ++j) beta[j] = a[j][p] / a[j][j];
    return beta;
}

inline std::int64_t oracle_lower_median(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    return v[(v.size() - 1) / 2];
}

// --- data builders -------------------------------------------------------

inline std::vector<double> random_taus(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> out(n);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_real_distribution<double> uni(0.1, 10.0);
    std::exponential_distribution<double> expo(1.0);
    std::lognormal_distribution<double> logn(0.0, 1.0);
    const int kind = pick(rng);
    for (double& t : out) {
        if (kind == 0)
            t = uni(rng);
        else if (kind == 1)
            t = expo(rng) + 1e-9;
        else
            t = logn(rng) + 1e-9;
    }
    return out;
}

// Event series with bit 1 everywhere and the given strictly increasing
// timestamps.
inline tifo::BinaryEventSeries event_series(const std::string& team,
                                            const std::vector<tifo::Timestamp>& times,
                                            tifo::Emotion emotion = tifo::Emotion::joy) {
    tifo::BinaryEventSeries s;
    s.team_id = team;
    s.emotion = emotion;
    for (tifo::Timestamp t : times) s.events.push_back({t, true});
    return s;
}

inline tifo::EmotionalSeries make_series(
    const std::string& team,
    const std::vector<std::pair<tifo::Timestamp, std::array<double, 4>>>& rows) {
    std::vector<tifo::Observation> obs;
    for (const auto& [ts, d] : rows) {
        tifo::Observation o;
        o.timestamp = ts;
        o.dist = tifo::EmotionDistribution::from_fractions(d[0], d[1], d[2], d[3]);
        obs.push_back(o);
    }
    return tifo::EmotionalSeries(team, std::move(obs));
}

inline tifo::TeamMetadata make_team(const std::string& id, tifo::League league, tifo::Geo geo,
                                    double pci, double mv, int heritage, int final_rank) {
    tifo::TeamMetadata t;
    t.team_id = id;
    t.league = league;
    t.geo = geo;
    t.pci = pci;
    t.unemployment = 0.1;
    t.welfare = 100.0;
    t.market_value = mv;
    t.heritage_rank = heritage;
    t.final_rank = final_rank;
    return t;
}

}  // namespace testutil
