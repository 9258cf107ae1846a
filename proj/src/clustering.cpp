#include "tifo/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "tifo/errors.hpp"
#include "tifo/util.hpp"

namespace tifo {

std::string_view to_string(Linkage l) {
    switch (l) {
        case Linkage::single: return "single";
        case Linkage::complete: return "complete";
        case Linkage::average: return "average";
    }
    return "?";
}

Linkage linkage_from_string(std::string_view name) {
    if (name == "single") return Linkage::single;
    if (name == "complete") return Linkage::complete;
    if (name == "average") return Linkage::average;
    throw Error("unknown linkage '" + std::string(name) + "'");
}

Dendrogram::Dendrogram(std::vector<std::string> labels, std::vector<MergeStep> steps)
    : labels_(std::move(labels)), steps_(std::move(steps)) {
    if (labels_.size() < 1) throw Error("dendrogram needs at least one leaf");
    if (steps_.size() != labels_.size() - 1)
        throw Error("dendrogram has " + std::to_string(steps_.size()) + " merges for " +
                    std::to_string(labels_.size()) + " leaves");
}

Dendrogram hierarchical_cluster(const DistanceMatrix& dm, Linkage linkage) {
    const std::size_t n = dm.size();
    if (n < 1) throw Error("empty distance matrix");

    // Active cluster list; ids follow the leaves-then-merges convention.
    struct Cluster {
        int id;
        int size;
    };
    std::vector<Cluster> active;
    active.reserve(n);
    for (std::size_t i = 0; i < n; ++i) active.push_back({static_cast<int>(i), 1});

    // Working inter-cluster distances, indexed by position in `active`.
    std::vector<std::vector<double>> d(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = dm.at(i, j);

    std::vector<MergeStep> steps;
    steps.reserve(n > 0 ? n - 1 : 0);
    int next_id = static_cast<int>(n);

    while (active.size() > 1) {
        std::size_t bi = 0, bj = 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < active.size(); ++i)
            for (std::size_t j = i + 1; j < active.size(); ++j)
                if (d[i][j] < best) {
                    best = d[i][j];
                    bi = i;
                    bj = j;
                }

        const int sa = active[bi].size, sb = active[bj].size;
        steps.push_back({std::min(active[bi].id, active[bj].id),
                         std::max(active[bi].id, active[bj].id), best, sa + sb});

        // Lance-Williams update into slot bi, drop slot bj.
        for (std::size_t k = 0; k < active.size(); ++k) {
            if (k == bi || k == bj) continue;
            double da = d[bi][k], db = d[bj][k], nd = 0;
            switch (linkage) {
                case Linkage::single: nd = std::min(da, db); break;
                case Linkage::complete: nd = std::max(da, db); break;
                case Linkage::average: nd = (sa * da + sb * db) / (sa + sb); break;
            }
            d[bi][k] = d[k][bi] = nd;
        }
        active[bi] = {next_id++, sa + sb};
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
        for (auto& row : d) row.erase(row.begin() + static_cast<std::ptrdiff_t>(bj));
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(bj));
    }

    std::vector<std::string> labels = dm.labels();
    return Dendrogram(std::move(labels), std::move(steps));
}

Partition cut_dendrogram(const Dendrogram& dg, double height) {
    if (height < 0) throw Error("cut height must be >= 0");
    const std::size_t n = dg.labels().size();

    // Union-find over leaf ids; merged cluster ids map to their leaves
    // through the parent of the step's two constituents.
    std::vector<int> parent(2 * n - 1 + (n == 0 ? 1 : 0));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    int next_id = static_cast<int>(n);
    for (const MergeStep& s : dg.steps()) {
        int id = next_id++;
        if (s.distance <= height) {
            parent[find(s.left)] = id;
            parent[find(s.right)] = id;
        }
    }

    Partition p;
    std::map<int, int> root_to_label;
    for (std::size_t i = 0; i < n; ++i) {
        int root = find(static_cast<int>(i));
        auto [it, fresh] = root_to_label.try_emplace(root, p.k + 1);
        if (fresh) ++p.k;
        p.assignment[dg.labels()[i]] = it->second;
    }
    return p;
}

Partition partition_into_k(const Dendrogram& dg, int k) {
    const std::size_t n = dg.labels().size();
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw Error("k must be between 1 and the number of leaves");

    std::vector<int> parent(2 * n - 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    int next_id = static_cast<int>(n);
    const std::size_t apply = n - static_cast<std::size_t>(k);
    for (std::size_t s = 0; s < apply; ++s) {
        const MergeStep& step = dg.steps()[s];
        int id = next_id++;
        parent[find(step.left)] = id;
        parent[find(step.right)] = id;
    }

    Partition p;
    std::map<int, int> root_to_label;
    for (std::size_t i = 0; i < n; ++i) {
        int root = find(static_cast<int>(i));
        auto [it, fresh] = root_to_label.try_emplace(root, p.k + 1);
        if (fresh) ++p.k;
        p.assignment[dg.labels()[i]] = it->second;
    }
    return p;
}

namespace {

// DTW alignment between two sequences: the cost-minimal monotone pairing,
// recovered by backtracking the full DP grid. Diagonal wins ties.
std::vector<std::pair<std::size_t, std::size_t>> dtw_path(std::span<const double> x,
                                                          std::span<const double> y) {
    const std::size_t n = x.size(), m = y.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> g((n + 1) * (m + 1), inf);
    auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
    g[at(0, 0)] = 0;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
            double cost = std::abs(x[i - 1] - y[j - 1]);
            g[at(i, j)] = cost + std::min({g[at(i - 1, j - 1)], g[at(i - 1, j)], g[at(i, j - 1)]});
        }

    std::vector<std::pair<std::size_t, std::size_t>> path;
    std::size_t i = n, j = m;
    while (i > 0 && j > 0) {
        path.emplace_back(i - 1, j - 1);
        double diag = g[at(i - 1, j - 1)], up = g[at(i - 1, j)], left = g[at(i, j - 1)];
        if (diag <= up && diag <= left) {
            --i;
            --j;
        } else if (up <= left) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(path.begin(), path.end());
    return path;
}

double cluster_cost(const std::vector<LabeledSignal>& dataset, const std::vector<std::size_t>& members,
                    const std::vector<double>& centroid) {
    double c = 0;
    for (std::size_t idx : members) c += dtw_distance(dataset[idx].values, centroid);
    return c;
}

// One barycenter-averaging pass: align every member to the centroid and
// replace each centroid sample with the mean of the values mapped to it.
std::vector<double> dba_step(const std::vector<LabeledSignal>& dataset,
                             const std::vector<std::size_t>& members,
                             const std::vector<double>& centroid) {
    std::vector<double> sums(centroid.size(), 0.0);
    std::vector<std::size_t> counts(centroid.size(), 0);
    for (std::size_t idx : members) {
        for (auto [ci, si] : dtw_path(centroid, dataset[idx].values)) {
            sums[ci] += dataset[idx].values[si];
            ++counts[ci];
        }
    }
    std::vector<double> out(centroid.size());
    for (std::size_t i = 0; i < centroid.size(); ++i)
        out[i] = counts[i] ? sums[i] / static_cast<double>(counts[i]) : centroid[i];
    return out;
}

constexpr int kDbaMaxIter = 30;
constexpr int kKMeansMaxIter = 100;
constexpr double kCostTol = 1e-6;

struct Restart {
    std::vector<int> assign;
    std::vector<std::vector<double>> centroids;
    double cost = std::numeric_limits<double>::infinity();
    std::vector<double> trace;
};

Restart run_kmeans_once(const std::vector<LabeledSignal>& dataset, int k, std::uint64_t seed) {
    const std::size_t n = dataset.size();
    Restart st;

    // Sample k distinct initial centroids (partial Fisher-Yates).
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t state = seed;
    auto next_u64 = [&state] {
        state = splitmix64(state);
        return state;
    };
    for (int i = 0; i < k; ++i) {
        std::size_t j = i + next_u64() % (n - static_cast<std::size_t>(i));
        std::swap(order[i], order[j]);
    }
    for (int c = 0; c < k; ++c) st.centroids.push_back(dataset[order[c]].values);

    st.assign.assign(n, -1);
    double prev_cost = std::numeric_limits<double>::infinity();

    for (int iter = 0; iter < kKMeansMaxIter; ++iter) {
        // Assignment: nearest centroid, lowest index on ties.
        std::vector<int> assign(n, 0);
        std::vector<double> point_cost(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            int bc = 0;
            for (int c = 0; c < k; ++c) {
                double dcost = dtw_distance(dataset[i].values, st.centroids[c]);
                if (dcost < best) {
                    best = dcost;
                    bc = c;
                }
            }
            assign[i] = bc;
            point_cost[i] = best;
        }

        // Re-seed emptied clusters from the farthest point.
        for (int c = 0; c < k; ++c) {
            if (std::count(assign.begin(), assign.end(), c)) continue;
            std::size_t far = 0;
            for (std::size_t i = 1; i < n; ++i)
                if (point_cost[i] > point_cost[far]) far = i;
            st.centroids[c] = dataset[far].values;
            assign[far] = c;
            point_cost[far] = 0;
        }

        bool stable = assign == st.assign;
        st.assign = assign;

        // Guarded barycenter update per cluster.
        for (int c = 0; c < k; ++c) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < n; ++i)
                if (assign[i] == c) members.push_back(i);
            if (members.empty()) continue;
            std::vector<double> centroid = st.centroids[c];
            double cost = cluster_cost(dataset, members, centroid);
            for (int it = 0; it < kDbaMaxIter; ++it) {
                std::vector<double> cand = dba_step(dataset, members, centroid);
                double cand_cost = cluster_cost(dataset, members, cand);
                if (cand_cost > cost - kCostTol) break;
                centroid = std::move(cand);
                cost = cand_cost;
            }
            st.centroids[c] = std::move(centroid);
        }

        double total = 0;
        for (std::size_t i = 0; i < n; ++i)
            total += dtw_distance(dataset[i].values, st.centroids[st.assign[i]]);
        st.trace.push_back(total);
        st.cost = total;
        if (stable && std::abs(prev_cost - total) < kCostTol) break;
        prev_cost = total;
    }
    return st;
}

}  // namespace

KMeansResult kmeans_dtw(const std::vector<LabeledSignal>& dataset, int k, std::uint64_t seed,
                        int restarts) {
    const std::size_t n = dataset.size();
    if (k < 1) throw Error("k must be >= 1");
    if (static_cast<std::size_t>(k) > n)
        throw Error("k=" + std::to_string(k) + " exceeds dataset size " + std::to_string(n));
    if (restarts < 1) throw Error("restarts must be >= 1");

    Restart best;
    for (int rs = 0; rs < restarts; ++rs) {
        Restart st = run_kmeans_once(dataset, k, derive_seed(seed, "kmeans_restart", rs));
        if (st.cost < best.cost) best = std::move(st);
    }

    KMeansResult out;
    out.centroids = best.centroids;
    out.total_cost = best.cost;
    out.cost_trace = best.trace;

    // Cluster labels 1..k by first appearance in dataset order.
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = relabel.try_emplace(best.assign[i], out.partition.k + 1);
        if (fresh) ++out.partition.k;
        out.partition.assignment[dataset[i].id] = it->second;
    }
    return out;
}

double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw Error("quantile of empty sample");
    if (p <= 0) return sorted.front();
    if (p >= 1) return sorted.back();
    double pos = p * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

namespace {

FiveNumber five_number(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return {v.front(), quantile_sorted(v, 0.25), quantile_sorted(v, 0.5), quantile_sorted(v, 0.75),
            v.back()};
}

}  // namespace

std::vector<ClusterProfile> profile_clusters(const Partition& p,
                                             const std::vector<TeamMetadata>& meta) {
    std::map<std::string, const TeamMetadata*> by_id;
    for (const TeamMetadata& t : meta) by_id[t.team_id] = &t;

    std::vector<const TeamMetadata*> teams;
    for (const auto& [team, cluster] : p.assignment) {
        auto it = by_id.find(team);
        if (it == by_id.end()) throw Error("no metadata for team '" + team + "'");
        teams.push_back(it->second);
    }

    // Dataset-wide tertile thresholds, then per-cluster tallies.
    auto tertile_thresholds = [&](auto key) {
        std::vector<double> v;
        v.reserve(teams.size());
        for (const TeamMetadata* t : teams) v.push_back(key(*t));
        std::sort(v.begin(), v.end());
        return std::pair{quantile_sorted(v, 1.0 / 3.0), quantile_sorted(v, 2.0 / 3.0)};
    };
    auto [pci_q1, pci_q2] = tertile_thresholds([](const TeamMetadata& t) { return t.pci; });
    auto [mv_q1, mv_q2] = tertile_thresholds([](const TeamMetadata& t) { return t.market_value; });
    auto tertile = [](double v, double q1, double q2) {
        return v <= q1 ? "Q1" : (v <= q2 ? "Q2" : "Q3");
    };

    std::map<int, std::vector<const TeamMetadata*>> clusters;
    for (const auto& [team, cluster] : p.assignment) clusters[cluster].push_back(by_id[team]);

    std::vector<ClusterProfile> out;
    for (const auto& [cluster, members] : clusters) {
        ClusterProfile cp;
        cp.cluster = cluster;
        cp.size = static_cast<int>(members.size());
        std::vector<double> ranks, dpci, dmv;
        for (const TeamMetadata* t : members) {
            ++cp.geo_counts[std::string(to_string(t->geo))];
            ++cp.league_counts[std::string(to_string(t->league))];
            ++cp.pci_tertile_counts[tertile(t->pci, pci_q1, pci_q2)];
            ++cp.mv_tertile_counts[tertile(t->market_value, mv_q1, mv_q2)];
            ranks.push_back(t->final_rank);
            dpci.push_back(t->delta_pci());
            dmv.push_back(t->delta_mv());
        }
        cp.final_rank = five_number(std::move(ranks));
        cp.delta_pci = five_number(std::move(dpci));
        cp.delta_mv = five_number(std::move(dmv));
        out.push_back(std::move(cp));
    }
    return out;
}

}  // namespace tifo
