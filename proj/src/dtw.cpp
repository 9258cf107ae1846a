#include "tifo/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "tifo/errors.hpp"

namespace tifo {

double dtw_distance(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) throw Error("dtw_distance on empty sequence");
    const std::size_t n = x.size(), m = y.size();
    constexpr double inf = std::numeric_limits<double>::infinity();

    // Two-row DP over the cumulative cost grid.
    std::vector<double> prev(m + 1, inf), cur(m + 1, inf);
    prev[0] = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = inf;
        for (std::size_t j = 1; j <= m; ++j) {
            double cost = std::abs(x[i - 1] - y[j - 1]);
            cur[j] = cost + std::min({prev[j], cur[j - 1], prev[j - 1]});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, std::vector<double> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
    const std::size_t n = labels_.size();
    if (values_.size() != n * n) throw Error("distance matrix shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (labels_[i] == labels_[j]) throw Error("duplicate label '" + labels_[i] + "'");
    for (std::size_t i = 0; i < n; ++i) {
        if (values_[i * n + i] != 0.0) throw Error("distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < i; ++j) {
            double a = values_[i * n + j], b = values_[j * n + i];
            if (a != b) throw Error("distance matrix is not symmetric");
            if (!(a >= 0)) throw Error("negative distance in matrix");
        }
    }
}

DistanceMatrix pairwise_distances(const std::vector<LabeledSignal>& dataset) {
    const std::size_t n = dataset.size();
    if (n < 2) throw Error("pairwise_distances needs at least 2 series");
    for (const LabeledSignal& s : dataset)
        if (s.values.empty()) throw Error("series '" + s.id + "' is empty");

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<double> values(n * n, 0.0);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            auto [i, j] = pairs[p];
            double d = dtw_distance(dataset[i].values, dataset[j].values);
            values[i * n + j] = d;
            values[j * n + i] = d;
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    std::size_t n_threads = std::min<std::size_t>(hw ? hw : 1, pairs.size());
    if (n_threads <= 1 || pairs.size() < 16) {
        work(0, pairs.size());
    } else {
        std::vector<std::thread> threads;
        std::size_t chunk = (pairs.size() + n_threads - 1) / n_threads;
        for (std::size_t t = 0; t < n_threads; ++t) {
            std::size_t b = t * chunk, e = std::min(pairs.size(), b + chunk);
            if (b < e) threads.emplace_back(work, b, e);
        }
        for (auto& th : threads) th.join();
    }

    std::vector<std::string> labels;
    labels.reserve(n);
    for (const LabeledSignal& s : dataset) labels.push_back(s.id);
    return DistanceMatrix(std::move(labels), std::move(values));
}

}  // namespace tifo
