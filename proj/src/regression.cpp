#include "tifo/regression.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "tifo/errors.hpp"
#include "tifo/util.hpp"

namespace tifo {

DesignMatrix DesignMatrix::without(const std::string& col) const {
    auto it = std::find(col_names.begin(), col_names.end(), col);
    if (it == col_names.end()) throw Error("no column named '" + col + "'");
    std::size_t drop = static_cast<std::size_t>(it - col_names.begin());
    if (drop == 0) throw Error("cannot drop the intercept column");

    DesignMatrix out;
    out.row_labels = row_labels;
    out.y = y;
    for (std::size_t j = 0; j < cols(); ++j)
        if (j != drop) out.col_names.push_back(col_names[j]);
    out.values.reserve(rows() * (cols() - 1));
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            if (j != drop) out.values.push_back(at(i, j));
    return out;
}

FitResult fit_ols(const DesignMatrix& dm) {
    const std::size_t n = dm.rows(), p = dm.cols();
    if (n == 0 || p == 0) throw Error("empty design matrix");
    if (n < p + 1)
        throw Error("need rows >= cols + 1, got " + std::to_string(n) + " rows for " +
                    std::to_string(p) + " columns");
    if (dm.y.size() != n) throw Error("response length mismatch");

    Eigen::MatrixXd X(n, p);
    Eigen::VectorXd y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y(static_cast<Eigen::Index>(i)) = dm.y[i];
        for (std::size_t j = 0; j < p; ++j)
            X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = dm.at(i, j);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(X);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    if (!(smin > 1e-10 * smax)) {
        // The pivoted QR ranks columns by explanatory power; the ones
        // past the numerical rank are the collinear culprits.
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
        qr.setThreshold(1e-10);
        std::string cols;
        for (Eigen::Index j = qr.rank(); j < static_cast<Eigen::Index>(p); ++j) {
            if (!cols.empty()) cols += ", ";
            cols += dm.col_names[static_cast<std::size_t>(qr.colsPermutation().indices()(j))];
        }
        throw Error("design matrix is rank deficient; collinear columns: " + cols);
    }

    Eigen::VectorXd beta = X.colPivHouseholderQr().solve(y);
    Eigen::VectorXd fitted = X * beta;
    Eigen::VectorXd resid = y - fitted;

    FitResult fit;
    fit.names = dm.col_names;
    fit.coefficients.assign(beta.data(), beta.data() + beta.size());
    fit.fitted.assign(fitted.data(), fitted.data() + fitted.size());
    fit.residuals.assign(resid.data(), resid.data() + resid.size());

    fit.standardized_coefficients = fit.coefficients;
    for (std::size_t j = 1; j < p; ++j) {
        double mu = X.col(static_cast<Eigen::Index>(j)).mean();
        double sd = std::sqrt((X.col(static_cast<Eigen::Index>(j)).array() - mu).square().sum() /
                              static_cast<double>(n));
        fit.standardized_coefficients[j] = fit.coefficients[j] * sd;
    }

    double ybar = y.mean();
    double ss_tot = (y.array() - ybar).square().sum();
    double ss_res = resid.squaredNorm();
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 0.0;
    fit.rmse = std::sqrt(ss_res / static_cast<double>(n));
    return fit;
}

double r_squared(const FitResult& fit) {
    const std::size_t n = fit.residuals.size();
    if (n == 0) throw Error("empty fit");
    double ss_res = 0, ybar = 0;
    for (std::size_t i = 0; i < n; ++i) ybar += fit.fitted[i] + fit.residuals[i];
    ybar /= static_cast<double>(n);
    double ss_tot = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double yi = fit.fitted[i] + fit.residuals[i];
        ss_tot += (yi - ybar) * (yi - ybar);
        ss_res += fit.residuals[i] * fit.residuals[i];
    }
    if (!(ss_tot > 0)) throw Error("R^2 undefined: response has zero variance");
    return 1.0 - ss_res / ss_tot;
}

double rmse(const FitResult& fit) {
    const std::size_t n = fit.residuals.size();
    if (n == 0) throw Error("empty fit");
    double ss = 0;
    for (double r : fit.residuals) ss += r * r;
    return std::sqrt(ss / static_cast<double>(n));
}

ModelBuild build_full_model(const std::vector<TeamMetadata>& meta,
                            const std::vector<BurstinessReport>& reports) {
    std::map<std::string, double> b_joy;
    for (const BurstinessReport& r : reports)
        if (r.emotion == Emotion::joy) b_joy[r.team_id] = r.b_n;

    ModelBuild out;
    out.matrix.col_names = {"intercept", "heritage", "pci", "mv", "welfare", "b_joy"};
    for (const TeamMetadata& t : meta) {
        auto it = b_joy.find(t.team_id);
        if (it == b_joy.end()) {
            out.excluded_teams.push_back(t.team_id);
            continue;
        }
        out.matrix.row_labels.push_back(t.team_id);
        out.matrix.y.push_back(t.final_rank);
        out.matrix.values.insert(out.matrix.values.end(),
                                 {1.0, static_cast<double>(t.heritage_rank), t.pci, t.market_value,
                                  t.welfare, it->second});
    }
    if (out.matrix.rows() == 0) throw Error("no team has both metadata and a defined joy B_n");
    return out;
}

AblationResult ablation_compare(const DesignMatrix& full, const std::string& drop) {
    AblationResult res;
    res.dropped = drop;
    res.full = fit_ols(full);
    res.reduced = fit_ols(full.without(drop));
    double r2f = r_squared(res.full), r2r = r_squared(res.reduced);
    double rf = rmse(res.full), rr = rmse(res.reduced);
    if (r2f == 0) throw Error("full-model R^2 is zero; relative drop undefined");
    if (rf == 0) throw Error("full-model RMSE is zero; relative increase undefined");
    res.delta_r2_pct = 100.0 * (r2f - r2r) / r2f;
    res.delta_rmse_pct = 100.0 * (rr - rf) / rf;
    return res;
}

}  // namespace tifo
