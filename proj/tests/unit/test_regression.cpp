#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "tifo/errors.hpp"
#include "tifo/regression.hpp"
#include "tifo/temporal_stats.hpp"

using namespace tifo;

namespace {

DesignMatrix make_design(const std::vector<std::string>& col_names,
                         const std::vector<std::vector<double>>& rows,
                         const std::vector<double>& y) {
    DesignMatrix dm;
    dm.col_names = col_names;
    dm.y = y;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        dm.row_labels.push_back("row" + std::to_string(i));
        dm.values.insert(dm.values.end(), rows[i].begin(), rows[i].end());
    }
    return dm;
}

// Random full-rank design with intercept, p-1 noise predictors and a
// noisy linear response.
DesignMatrix random_design(std::mt19937_64& rng, std::size_t n, std::size_t p) {
    std::uniform_real_distribution<double> uni(-4, 4);
    std::normal_distribution<double> noise(0.0, 0.5);
    std::vector<double> beta(p);
    for (double& b : beta) b = uni(rng);
    std::vector<std::vector<double>> rows(n, std::vector<double>(p, 1.0));
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j < p; ++j) rows[i][j] = uni(rng);
        y[i] = 0;
        for (std::size_t j = 0; j < p; ++j) y[i] += beta[j] * rows[i][j];
        y[i] += noise(rng);
    }
    std::vector<std::string> names{"intercept"};
    for (std::size_t j = 1; j < p; ++j) names.push_back("x" + std::to_string(j));
    return make_design(names, rows, y);
}

std::vector<std::vector<double>> rows_of(const DesignMatrix& dm) {
    std::vector<std::vector<double>> rows(dm.rows(), std::vector<double>(dm.cols()));
    for (std::size_t i = 0; i < dm.rows(); ++i)
        for (std::size_t j = 0; j < dm.cols(); ++j) rows[i][j] = dm.at(i, j);
    return rows;
}

}  // namespace

TEST_CASE("fit_ols recovers an exact line") {
    auto dm = make_design({"intercept", "x"},
                          {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                          {1, 3, 5, 7});
    FitResult fit = fit_ols(dm);
    REQUIRE(fit.coefficients.size() == 2);
    CHECK(fit.coefficients[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fit.coefficients[1] == doctest::Approx(2.0).epsilon(1e-10));
    for (double r : fit.residuals) CHECK(std::abs(r) < 1e-10);
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.rmse < 1e-10);
    CHECK(r_squared(fit) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit_ols with a constant response") {
    auto dm = make_design({"intercept", "x"},
                          {{1, 0}, {1, 1}, {1, 2}, {1, 5}},
                          {4, 4, 4, 4});
    FitResult fit = fit_ols(dm);
    CHECK(fit.coefficients[0] == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(std::abs(fit.coefficients[1]) < 1e-10);
    // The stored figure collapses to 0 when the response cannot vary;
    // the standalone accessor refuses instead.
    CHECK(fit.r_squared == 0.0);
    CHECK_THROWS_AS(r_squared(fit), Error);
    CHECK(rmse(fit) < 1e-10);
}

TEST_CASE("fit_ols agrees with the normal-equation oracle") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 100; ++trial) {
        DesignMatrix dm = random_design(rng, 20, 4);
        FitResult fit = fit_ols(dm);
        std::vector<double> beta = testutil::oracle_ols(rows_of(dm), dm.y);
        REQUIRE(beta.size() == fit.coefficients.size());
        for (std::size_t j = 0; j < beta.size(); ++j)
            CHECK(fit.coefficients[j] == doctest::Approx(beta[j]).epsilon(1e-8));
        // Fitted + residual reconstructs the response exactly.
        for (std::size_t i = 0; i < dm.rows(); ++i)
            CHECK(fit.fitted[i] + fit.residuals[i] == doctest::Approx(dm.y[i]).epsilon(1e-12));
    }
}

TEST_CASE("fit_ols recovers planted coefficients from noiseless data") {
    std::mt19937_64 rng(400);
    std::uniform_real_distribution<double> uni(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 12, p = 4;
        std::vector<double> beta{uni(rng), uni(rng), uni(rng), uni(rng)};
        std::vector<std::vector<double>> rows(n, std::vector<double>(p, 1.0));
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 1; j < p; ++j) rows[i][j] = uni(rng);
            for (std::size_t j = 0; j < p; ++j) y[i] += beta[j] * rows[i][j];
        }
        FitResult fit = fit_ols(make_design({"intercept", "a", "b", "c"}, rows, y));
        for (std::size_t j = 0; j < p; ++j)
            CHECK(fit.coefficients[j] == doctest::Approx(beta[j]).epsilon(1e-8));
    }
}

TEST_CASE("residuals are orthogonal to every design column") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        DesignMatrix dm = random_design(rng, 25, 5);
        FitResult fit = fit_ols(dm);
        double scale = 0;
        for (double v : dm.y) scale += std::abs(v);
        for (std::size_t j = 0; j < dm.cols(); ++j) {
            double dot = 0;
            for (std::size_t i = 0; i < dm.rows(); ++i) dot += dm.at(i, j) * fit.residuals[i];
            CHECK(std::abs(dot) < 1e-8 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("adding a predictor never lowers R^2") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        DesignMatrix full = random_design(rng, 18, 5);
        FitResult f = fit_ols(full);
        // Drop each non-intercept column in turn.
        for (std::size_t j = 1; j < full.cols(); ++j) {
            FitResult red = fit_ols(full.without(full.col_names[j]));
            CHECK(f.r_squared >= red.r_squared - 1e-12);
        }
    }
}

TEST_CASE("variance decomposition holds") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        DesignMatrix dm = random_design(rng, 30, 4);
        FitResult fit = fit_ols(dm);
        const double n = static_cast<double>(dm.rows());
        double ybar = 0;
        for (double v : dm.y) ybar += v;
        ybar /= n;
        double ss_tot = 0, ss_exp = 0;
        for (std::size_t i = 0; i < dm.rows(); ++i) {
            ss_tot += (dm.y[i] - ybar) * (dm.y[i] - ybar);
            ss_exp += (fit.fitted[i] - ybar) * (fit.fitted[i] - ybar);
        }
        CHECK(fit.rmse * fit.rmse * n + ss_exp == doctest::Approx(ss_tot).epsilon(1e-8));
        CHECK(r_squared(fit) == doctest::Approx(fit.r_squared).epsilon(1e-12));
        CHECK(rmse(fit) == doctest::Approx(fit.rmse).epsilon(1e-12));
    }
}

TEST_CASE("fits are invariant under affine predictor rescaling") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        DesignMatrix dm = random_design(rng, 20, 4);
        FitResult base = fit_ols(dm);

        // x1 -> 3.5 x1 - 2: same column space, same fit.
        DesignMatrix scaled = dm;
        for (std::size_t i = 0; i < dm.rows(); ++i)
            scaled.values[i * dm.cols() + 1] = 3.5 * dm.at(i, 1) - 2.0;
        FitResult other = fit_ols(scaled);

        for (std::size_t i = 0; i < dm.rows(); ++i)
            CHECK(other.fitted[i] == doctest::Approx(base.fitted[i]).epsilon(1e-10));
        CHECK(other.r_squared == doctest::Approx(base.r_squared).epsilon(1e-10));
        CHECK(other.rmse == doctest::Approx(base.rmse).epsilon(1e-10));
        CHECK(other.coefficients[1] == doctest::Approx(base.coefficients[1] / 3.5).epsilon(1e-8));
        // slope x sd is unchanged by positive rescaling.
        CHECK(other.standardized_coefficients[1] ==
              doctest::Approx(base.standardized_coefficients[1]).epsilon(1e-8));
    }
}

TEST_CASE("intercept-only fit produces R^2 = 0 and rmse = population sd") {
    const std::vector<double> y{3, 5, 9, 11, 2};
    auto dm = make_design({"intercept"}, {{1}, {1}, {1}, {1}, {1}}, y);
    FitResult fit = fit_ols(dm);
    const double ybar = testutil::oracle_mean(y);
    CHECK(fit.coefficients[0] == doctest::Approx(ybar).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r_squared(fit) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fit.rmse == doctest::Approx(testutil::oracle_stddev(y)).epsilon(1e-12));
}

TEST_CASE("standardized coefficients are slope times population sd") {
    std::mt19937_64 rng(8);
    DesignMatrix dm = random_design(rng, 40, 4);
    FitResult fit = fit_ols(dm);
    CHECK(fit.standardized_coefficients[0] == fit.coefficients[0]);
    for (std::size_t j = 1; j < dm.cols(); ++j) {
        std::vector<double> col(dm.rows());
        for (std::size_t i = 0; i < dm.rows(); ++i) col[i] = dm.at(i, j);
        CHECK(fit.standardized_coefficients[j] ==
              doctest::Approx(fit.coefficients[j] * testutil::oracle_stddev(col)).epsilon(1e-10));
    }
}

TEST_CASE("fit_ols rejects rank-deficient designs and names the culprits") {
    // dup_two is an exact copy of dup_one.
    auto dm = make_design({"intercept", "dup_one", "dup_two"},
                          {{1, 1, 1}, {1, 2, 2}, {1, 3, 3}, {1, 4, 4}, {1, 5, 5}},
                          {1, 2, 3, 4, 5});
    try {
        fit_ols(dm);
        FAIL("expected a rank error");
    } catch (const Error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("collinear") != std::string::npos);
        CHECK(msg.find("dup_") != std::string::npos);
    }
}

TEST_CASE("fit_ols shape validation") {
    DesignMatrix empty;
    CHECK_THROWS_AS(fit_ols(empty), Error);

    // 3 rows cannot support 3 columns (needs rows >= cols + 1).
    auto tight = make_design({"intercept", "a", "b"},
                             {{1, 1, 2}, {1, 2, 1}, {1, 3, 5}},
                             {1, 2, 3});
    CHECK_THROWS_AS(fit_ols(tight), Error);

    auto bad_y = make_design({"intercept", "a"}, {{1, 1}, {1, 2}, {1, 3}}, {1, 2});
    CHECK_THROWS_AS(fit_ols(bad_y), Error);
}

TEST_CASE("DesignMatrix::without drops exactly one named column") {
    auto dm = make_design({"intercept", "a", "b"},
                          {{1, 10, 100}, {1, 20, 200}, {1, 30, 300}, {1, 40, 400}},
                          {1, 2, 3, 4});
    DesignMatrix red = dm.without("a");
    CHECK(red.col_names == std::vector<std::string>{"intercept", "b"});
    CHECK(red.rows() == 4);
    CHECK(red.at(2, 1) == 300.0);
    CHECK(red.y == dm.y);
    CHECK(red.row_labels == dm.row_labels);
    CHECK_THROWS_AS(dm.without("zzz"), Error);
    CHECK_THROWS_AS(dm.without("intercept"), Error);
}

namespace {

BurstinessReport joy_report(const std::string& team, double b_n) {
    BurstinessReport r;
    r.team_id = team;
    r.emotion = Emotion::joy;
    r.b_n = b_n;
    return r;
}

std::vector<TeamMetadata> model_teams() {
    std::vector<TeamMetadata> meta;
    for (int i = 0; i < 6; ++i) {
        TeamMetadata t = testutil::make_team("team" + std::to_string(i), League::A, Geo::North,
                                             20000.0 + 1000 * i, 1e7 * (i + 1), i + 1, 6 - i);
        t.welfare = 100.0 + 10 * i;
        meta.push_back(t);
    }
    return meta;
}

}  // namespace

TEST_CASE("build_full_model assembles the six-column design") {
    auto meta = model_teams();
    std::vector<BurstinessReport> reps;
    for (int i = 0; i < 6; ++i) reps.push_back(joy_report("team" + std::to_string(i), 0.1 * i));
    // Reports for other emotions must not satisfy the joy requirement.
    BurstinessReport anger = joy_report("team0", 0.9);
    anger.emotion = Emotion::anger;
    reps.push_back(anger);

    ModelBuild build = build_full_model(meta, reps);
    CHECK(build.excluded_teams.empty());
    REQUIRE(build.matrix.rows() == 6);
    REQUIRE(build.matrix.cols() == 6);
    CHECK(build.matrix.col_names ==
          std::vector<std::string>{"intercept", "heritage", "pci", "mv", "welfare", "b_joy"});
    // Row for team2: intercept, heritage 3, pci 22000, mv 3e7, welfare 120, b_n 0.2.
    CHECK(build.matrix.row_labels[2] == "team2");
    CHECK(build.matrix.at(2, 0) == 1.0);
    CHECK(build.matrix.at(2, 1) == 3.0);
    CHECK(build.matrix.at(2, 2) == 22000.0);
    CHECK(build.matrix.at(2, 3) == 3e7);
    CHECK(build.matrix.at(2, 4) == 120.0);
    CHECK(build.matrix.at(2, 5) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(build.matrix.y[2] == 4.0);  // final rank of team2
}

TEST_CASE("build_full_model excludes teams lacking a joy figure") {
    auto meta = model_teams();
    std::vector<BurstinessReport> reps;
    for (int i = 0; i < 6; ++i)
        if (i != 3) reps.push_back(joy_report("team" + std::to_string(i), 0.05 * i));
    // team3 only has an anger report, which does not count.
    BurstinessReport anger = joy_report("team3", 0.5);
    anger.emotion = Emotion::anger;
    reps.push_back(anger);

    ModelBuild build = build_full_model(meta, reps);
    CHECK(build.matrix.rows() == 5);
    CHECK(build.excluded_teams == std::vector<std::string>{"team3"});
    for (const std::string& label : build.matrix.row_labels) CHECK(label != "team3");

    CHECK_THROWS_AS(build_full_model(meta, {}), Error);
}

TEST_CASE("ablation on an informative vs a noise column") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> uni(-3, 3);
    std::normal_distribution<double> eps(0.0, 0.1);
    const std::size_t n = 60;
    std::vector<std::vector<double>> rows(n, std::vector<double>(3, 1.0));
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i][1] = uni(rng);                       // drives y
        rows[i][2] = uni(rng);                       // pure noise
        y[i] = 3.0 + 2.0 * rows[i][1] + eps(rng);
    }
    auto dm = make_design({"intercept", "signal", "noise"}, rows, y);

    AblationResult drop_noise = ablation_compare(dm, "noise");
    CHECK(drop_noise.dropped == "noise");
    CHECK(std::abs(drop_noise.delta_r2_pct) < 2.0);
    CHECK(std::abs(drop_noise.delta_rmse_pct) < 10.0);

    AblationResult drop_signal = ablation_compare(dm, "signal");
    CHECK(drop_signal.delta_r2_pct > 50.0);
    CHECK(drop_signal.delta_rmse_pct > 100.0);

    // The reported percentages follow from the standalone figures.
    const double r2f = r_squared(drop_signal.full);
    const double r2r = r_squared(drop_signal.reduced);
    CHECK(drop_signal.delta_r2_pct == doctest::Approx(100.0 * (r2f - r2r) / r2f).epsilon(1e-12));
    const double rf = rmse(drop_signal.full);
    const double rr = rmse(drop_signal.reduced);
    CHECK(drop_signal.delta_rmse_pct == doctest::Approx(100.0 * (rr - rf) / rf).epsilon(1e-12));

    CHECK_THROWS_AS(ablation_compare(dm, "absent"), Error);
}

TEST_CASE("ablation reduced fit equals a directly constructed reduced fit") {
    std::mt19937_64 rng(555);
    DesignMatrix dm = random_design(rng, 25, 4);
    AblationResult res = ablation_compare(dm, "x2");
    FitResult direct = fit_ols(dm.without("x2"));
    CHECK(res.reduced.coefficients == direct.coefficients);
    CHECK(res.reduced.r_squared == direct.r_squared);
    CHECK(res.reduced.rmse == direct.rmse);
    CHECK(res.reduced.residuals == direct.residuals);
}
