#pragma once

#include <span>
#include <string>
#include <vector>

namespace tifo {

// Dynamic time warping with |x_i - y_j| local cost, unnormalized path
// sum, steps {right, down, diagonal}, endpoints pinned, no window.
// Throws Error on an empty input.
double dtw_distance(std::span<const double> x, std::span<const double> y);

// One univariate signal with its owner id.
struct LabeledSignal {
    std::string id;
    std::vector<double> values;
};

// Symmetric pairwise dissimilarities with zero diagonal. Entries are
// indexed by position in labels().
class DistanceMatrix {
public:
    DistanceMatrix(std::vector<std::string> labels, std::vector<double> values);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    double at(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }

private:
    std::vector<std::string> labels_;
    std::vector<double> values_;  // row-major n*n
};

// Full DTW distance matrix over the dataset; pairs are independent, so
// they are computed across a small thread pool. Requires >= 2 series.
DistanceMatrix pairwise_distances(const std::vector<LabeledSignal>& dataset);

}  // namespace tifo
