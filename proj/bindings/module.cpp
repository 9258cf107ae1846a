// Python bindings for the core operations: inter-event statistics, DTW,
// clustering, least squares, point-process simulation, and rank deltas.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tifo/clustering.hpp"
#include "tifo/dtw.hpp"
#include "tifo/errors.hpp"
#include "tifo/regression.hpp"
#include "tifo/simulate.hpp"
#include "tifo/temporal_stats.hpp"
#include "tifo/types.hpp"

namespace py = pybind11;

namespace {

tifo::InterEventTimes as_taus(const std::vector<double>& taus) {
    return tifo::InterEventTimes(taus);
}

std::vector<tifo::LabeledSignal> as_signals(const std::vector<std::string>& labels,
                                            const std::vector<std::vector<double>>& series) {
    if (labels.size() != series.size())
        throw tifo::Error("labels and series must have the same length");
    std::vector<tifo::LabeledSignal> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        out.push_back({labels[i], series[i]});
    return out;
}

tifo::DistanceMatrix as_matrix(const std::vector<std::string>& labels,
                               const std::vector<std::vector<double>>& rows) {
    std::vector<double> flat;
    for (const auto& row : rows) {
        if (row.size() != labels.size()) throw tifo::Error("distance matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return tifo::DistanceMatrix(labels, std::move(flat));
}

tifo::Dendrogram as_dendrogram(const std::vector<std::string>& labels,
                               const std::vector<std::tuple<int, int, double, int>>& merges) {
    std::vector<tifo::MergeStep> steps;
    for (const auto& [l, r, d, s] : merges) steps.push_back({l, r, d, s});
    return tifo::Dendrogram(labels, std::move(steps));
}

std::vector<std::tuple<int, int, double, int>> merges_of(const tifo::Dendrogram& dg) {
    std::vector<std::tuple<int, int, double, int>> out;
    for (const auto& s : dg.steps()) out.emplace_back(s.left, s.right, s.distance, s.size);
    return out;
}

py::dict fit_to_dict(const tifo::FitResult& fit) {
    py::dict d;
    d["names"] = fit.names;
    d["coefficients"] = fit.coefficients;
    d["standardized_coefficients"] = fit.standardized_coefficients;
    d["fitted"] = fit.fitted;
    d["residuals"] = fit.residuals;
    d["r_squared"] = fit.r_squared;
    d["rmse"] = fit.rmse;
    return d;
}

tifo::DesignMatrix make_design(const std::vector<std::string>& names,
                               const std::vector<std::vector<double>>& rows,
                               const std::vector<double>& y) {
    if (rows.size() != y.size()) throw tifo::Error("rows and y must have the same length");
    tifo::DesignMatrix dm;
    dm.col_names.push_back("intercept");
    dm.col_names.insert(dm.col_names.end(), names.begin(), names.end());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != names.size())
            throw tifo::Error("row " + std::to_string(i) + " width != len(names)");
        dm.row_labels.push_back("row" + std::to_string(i));
        dm.values.push_back(1.0);
        dm.values.insert(dm.values.end(), rows[i].begin(), rows[i].end());
    }
    dm.y = y;
    return dm;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Temporal analytics for fan-community emotion series: burstiness and "
        "memory of inter-event times, DTW clustering, least squares, and "
        "deterministic point-process simulators.";

    py::register_exception<tifo::Error>(m, "TifoError");

    m.def(
        "coefficient_of_variation",
        [](const std::vector<double>& taus) { return tifo::coefficient_of_variation(as_taus(taus)); },
        py::arg("taus"), "sigma/mu of the inter-event times (population sigma).");
    m.def(
        "burstiness",
        [](const std::vector<double>& taus) { return tifo::burstiness(as_taus(taus)); },
        py::arg("taus"), "B = (r - 1) / (r + 1), in [-1, 1).");
    m.def("finite_size_burstiness", &tifo::finite_size_burstiness, py::arg("r"), py::arg("n"),
          "Finite-size corrected burstiness from (r, n).");
    m.def(
        "burstiness_finite",
        [](const std::vector<double>& taus) { return tifo::burstiness_finite(as_taus(taus)); },
        py::arg("taus"), "Finite-size corrected burstiness of a sequence.");
    m.def(
        "memory",
        [](const std::vector<double>& taus, std::size_t lag) -> std::optional<double> {
            return tifo::memory(as_taus(taus), lag);
        },
        py::arg("taus"), py::arg("lag") = 1,
        "Lag-k inter-event correlation; None when a window has zero variance.");

    m.def("delta_rank", &tifo::delta_rank, py::arg("expected_rank"), py::arg("final_rank"),
          "Expected minus final rank; positive means outperformance.");

    m.def(
        "dtw_distance",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            return tifo::dtw_distance(x, y);
        },
        py::arg("x"), py::arg("y"),
        "Dynamic-time-warping dissimilarity (|.| local cost, unnormalized).");
    m.def(
        "pairwise_distances",
        [](const std::vector<std::string>& labels,
           const std::vector<std::vector<double>>& series) {
            tifo::DistanceMatrix dm = tifo::pairwise_distances(as_signals(labels, series));
            std::vector<std::vector<double>> rows(dm.size(), std::vector<double>(dm.size()));
            for (std::size_t i = 0; i < dm.size(); ++i)
                for (std::size_t j = 0; j < dm.size(); ++j) rows[i][j] = dm.at(i, j);
            return rows;
        },
        py::arg("labels"), py::arg("series"), "Symmetric DTW distance matrix in label order.");

    m.def(
        "hierarchical_cluster",
        [](const std::vector<std::string>& labels, const std::vector<std::vector<double>>& dist,
           const std::string& linkage) {
            return merges_of(tifo::hierarchical_cluster(as_matrix(labels, dist),
                                                        tifo::linkage_from_string(linkage)));
        },
        py::arg("labels"), py::arg("distances"), py::arg("linkage") = "average",
        "Agglomerative merges as (left, right, distance, size) tuples; "
        "leaves are 0..n-1 in label order, merge s creates id n+s.");
    m.def(
        "cut_dendrogram",
        [](const std::vector<std::string>& labels,
           const std::vector<std::tuple<int, int, double, int>>& merges, double height) {
            return tifo::cut_dendrogram(as_dendrogram(labels, merges), height).assignment;
        },
        py::arg("labels"), py::arg("merges"), py::arg("height"),
        "Partition from merges with distance <= height; labels 1..k.");
    m.def(
        "partition_into_k",
        [](const std::vector<std::string>& labels,
           const std::vector<std::tuple<int, int, double, int>>& merges, int k) {
            return tifo::partition_into_k(as_dendrogram(labels, merges), k).assignment;
        },
        py::arg("labels"), py::arg("merges"), py::arg("k"),
        "Partition into exactly k groups by applying the first n-k merges.");
    m.def(
        "kmeans_dtw",
        [](const std::vector<std::string>& labels, const std::vector<std::vector<double>>& series,
           int k, std::uint64_t seed, int restarts) {
            tifo::KMeansResult res = tifo::kmeans_dtw(as_signals(labels, series), k, seed, restarts);
            py::dict d;
            d["assignment"] = res.partition.assignment;
            d["centroids"] = res.centroids;
            d["total_cost"] = res.total_cost;
            d["cost_trace"] = res.cost_trace;
            return d;
        },
        py::arg("labels"), py::arg("series"), py::arg("k"), py::arg("seed") = 0,
        py::arg("restarts") = 8,
        "DTW k-means with barycenter-averaged centroids; deterministic in (seed, restarts).");

    m.def(
        "fit_ols",
        [](const std::vector<std::string>& names, const std::vector<std::vector<double>>& rows,
           const std::vector<double>& y) { return fit_to_dict(tifo::fit_ols(make_design(names, rows, y))); },
        py::arg("names"), py::arg("rows"), py::arg("y"),
        "Least squares of y on [1, rows]; returns coefficients, R^2, RMSE, residuals.");

    m.def(
        "simulate_events",
        [](const std::string& kind, std::size_t n, std::uint64_t seed, double interval,
           double rate, double shape, double scale, double p_stay, double tau_short,
           double tau_long) {
            tifo::SimulateParams p;
            p.kind = tifo::process_kind_from_string(kind);
            p.n_events = n;
            p.seed = seed;
            p.interval = interval;
            p.rate = rate;
            p.shape = shape;
            p.scale = scale;
            p.p_stay = p_stay;
            p.tau_short = tau_short;
            p.tau_long = tau_long;
            return tifo::simulate_events(p);
        },
        py::arg("kind"), py::arg("n"), py::arg("seed") = 0, py::arg("interval") = 1.0,
        py::arg("rate") = 1.0, py::arg("shape") = 2.5, py::arg("scale") = 1.0,
        py::arg("p_stay") = 0.9, py::arg("tau_short") = 1.0, py::arg("tau_long") = 10.0,
        "Event timestamps (t=0 first) from a periodic/poisson/pareto/markov process.");
}
