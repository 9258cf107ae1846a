#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tifo/dtw.hpp"
#include "tifo/types.hpp"

namespace tifo {

enum class Linkage { single, complete, average };

std::string_view to_string(Linkage l);
Linkage linkage_from_string(std::string_view name);

// One agglomeration step. Cluster ids follow the usual convention:
// leaves are 0..n-1 in label order, the step-s merge creates id n+s.
struct MergeStep {
    int left = 0;
    int right = 0;
    double distance = 0;
    int size = 0;  // of the merged cluster
};

class Dendrogram {
public:
    Dendrogram(std::vector<std::string> labels, std::vector<MergeStep> steps);

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<MergeStep>& steps() const { return steps_; }

private:
    std::vector<std::string> labels_;
    std::vector<MergeStep> steps_;
};

// Disjoint exhaustive assignment, cluster labels 1..k.
struct Partition {
    std::map<std::string, int> assignment;
    int k = 0;
};

// Agglomerates greedily under the chosen linkage (Lance-Williams
// updates). Merge ties break on the smallest pair of cluster ids.
Dendrogram hierarchical_cluster(const DistanceMatrix& dm, Linkage linkage = Linkage::average);

// Connected groups under all merges with distance <= height. Cluster
// labels are assigned by first appearance in leaf order.
Partition cut_dendrogram(const Dendrogram& dg, double height);

// Exactly k groups, produced by applying the first n-k merges in order.
// Labels again follow first appearance in leaf order.
Partition partition_into_k(const Dendrogram& dg, int k);

struct KMeansResult {
    Partition partition;
    std::vector<std::vector<double>> centroids;
    double total_cost = 0;           // summed within-cluster DTW distance
    std::vector<double> cost_trace;  // per iteration of the winning restart
};

// Lloyd-style iteration with DTW assignments and barycenter-averaged
// centroids; a centroid update is kept only if it does not increase the
// cluster's cost. Emptied clusters are re-seeded from the point farthest
// from its current centroid. Deterministic in (seed, restarts).
KMeansResult kmeans_dtw(const std::vector<LabeledSignal>& dataset, int k, std::uint64_t seed,
                        int restarts = 8);

struct FiveNumber {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

// Categorical counts and continuous summaries for one cluster. Tertile
// labels (Q1 low .. Q3 high) are computed over the whole dataset before
// splitting by cluster.
struct ClusterProfile {
    int cluster = 0;
    int size = 0;
    std::map<std::string, int> geo_counts;
    std::map<std::string, int> league_counts;
    std::map<std::string, int> pci_tertile_counts;
    std::map<std::string, int> mv_tertile_counts;
    FiveNumber final_rank;
    FiveNumber delta_pci;
    FiveNumber delta_mv;
};

// Throws Error naming the team when its metadata is missing.
std::vector<ClusterProfile> profile_clusters(const Partition& p,
                                             const std::vector<TeamMetadata>& meta);

// Linear-interpolation quantile of an ascending-sorted sample.
double quantile_sorted(std::span<const double> sorted, double p);

}  // namespace tifo
