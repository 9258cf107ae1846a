#pragma once

#include <string>
#include <vector>

#include "tifo/types.hpp"

namespace tifo {

// Row-major design matrix with named columns; the first column is the
// intercept (all ones). Response y holds the final ranks.
struct DesignMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_names;
    std::vector<double> values;  // rows() x cols()
    std::vector<double> y;

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_names.size(); }
    double at(std::size_t i, std::size_t j) const { return values[i * cols() + j]; }

    // Copy without the named column. Throws if the name is missing or
    // is the intercept.
    DesignMatrix without(const std::string& col) const;
};

struct FitResult {
    std::vector<std::string> names;
    std::vector<double> coefficients;
    // Slopes rescaled by the predictor's population sd (display only);
    // the intercept entry is kept as-is.
    std::vector<double> standardized_coefficients;
    std::vector<double> fitted;
    std::vector<double> residuals;
    double r_squared = 0;
    double rmse = 0;
};

// Least squares via column-pivoted QR, with an SVD-based rank gate:
// smallest singular value must exceed 1e-10 x largest, else throws Error
// naming the collinear columns.
FitResult fit_ols(const DesignMatrix& dm);

// 1 - SS_res/SS_tot about the response mean; zero response variance is
// an explicit error, never 0 or 1.
double r_squared(const FitResult& fit);

// sqrt(mean squared residual), divisor n.
double rmse(const FitResult& fit);

struct ModelBuild {
    DesignMatrix matrix;
    std::vector<std::string> excluded_teams;  // no defined joy B_n
};

// Full model columns [intercept, heritage, pci, mv, welfare, b_joy],
// response final rank. b_joy is the finite-size burstiness of the joy
// event sequence; teams lacking one are excluded and listed.
ModelBuild build_full_model(const std::vector<TeamMetadata>& meta,
                            const std::vector<BurstinessReport>& reports);

struct AblationResult {
    FitResult full;
    FitResult reduced;
    std::string dropped;
    double delta_r2_pct = 0;    // 100 (R2_full - R2_red) / R2_full
    double delta_rmse_pct = 0;  // 100 (RMSE_red - RMSE_full) / RMSE_full
};

AblationResult ablation_compare(const DesignMatrix& full, const std::string& drop);

}  // namespace tifo
