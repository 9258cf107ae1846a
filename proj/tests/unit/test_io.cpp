#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "helpers.hpp"
#include "tifo/errors.hpp"
#include "tifo/io.hpp"
#include "tifo/temporal_stats.hpp"

using namespace tifo;

TEST_CASE("daily series JSON round-trips") {
    const Timestamp day0 = 1659312000;
    auto series = testutil::make_series("borgo rosso", {
                                                          {day0, {0.5, 0.25, 0.125, 0.125}},
                                                          {day0 + 86400, {0.1, 0.6, 0.2, 0.1}},
                                                      });
    const std::string doc = daily_series_to_json(series);
    EmotionalSeries back = series_from_json(doc);
    CHECK(back.team_id() == "borgo rosso");
    REQUIRE(back.length() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(back.observations()[i].timestamp == series.observations()[i].timestamp);
        // Parsing renormalizes, which can wiggle the last bit when the
        // shares do not sum to exactly 1 in floating point.
        for (Emotion e : kAllEmotions)
            CHECK(back.observations()[i].dist[e] ==
                  doctest::Approx(series.observations()[i].dist[e]).epsilon(1e-14));
    }

    // With exactly-representable shares summing to exactly 1 the cycle
    // is byte-stable.
    auto exact = testutil::make_series("team", {{day0, {0.5, 0.25, 0.125, 0.125}}});
    const std::string exact_doc = daily_series_to_json(exact);
    CHECK(daily_series_to_json(series_from_json(exact_doc)) == exact_doc);
}

TEST_CASE("retained-post JSON parses as a series too") {
    PostRecord p;
    p.team_id = "team";
    p.timestamp = 1659312000;
    p.n_comments = 42;
    p.dist = EmotionDistribution::from_fractions(0.4, 0.3, 0.2, 0.1);
    PostRecord q = p;
    q.timestamp += 3600;
    q.n_comments = 7;
    const std::string doc = posts_to_json("team", {p, q});
    CHECK(doc.find("\"kind\": \"retained\"") != std::string::npos);
    CHECK(doc.find("\"n_comments\": 42") != std::string::npos);

    EmotionalSeries series = series_from_json(doc);
    CHECK(series.team_id() == "team");
    REQUIRE(series.length() == 2);
    CHECK(series.observations()[0].dist[Emotion::joy] == doctest::Approx(0.4).epsilon(1e-12));
    // Retained documents carry no n_posts; the default is one post each.
    CHECK(series.observations()[0].n_posts == 1);
}

TEST_CASE("series_from_json rejects malformed documents") {
    CHECK_THROWS(series_from_json("not json"));
    CHECK_THROWS(series_from_json("{}"));
    CHECK_THROWS(series_from_json(R"({"team_id":"t","observations":[]})"));  // empty series
    // Out-of-order timestamps violate the series invariant.
    CHECK_THROWS(series_from_json(R"({"team_id":"t","observations":[
        {"timestamp":"2022-08-02T00:00:00Z","joy":1,"anger":0,"sadness":0,"fear":0},
        {"timestamp":"2022-08-01T00:00:00Z","joy":1,"anger":0,"sadness":0,"fear":0}]})"));
}

TEST_CASE("ingest_stats_csv golden output") {
    IngestStats s;
    s.team_id = "acqualta";
    s.total_posts = 120;
    s.retained_posts = 61;
    s.median_comments = 14;
    s.posts_per_day_min = 1;
    s.posts_per_day_median = 2;
    s.posts_per_day_max = 5;
    CHECK(ingest_stats_csv({s}) ==
          "team_id,total_posts,retained_posts,median_comments,posts_per_day_min,"
          "posts_per_day_median,posts_per_day_max\n"
          "acqualta,120,61,14,1,2,5\n");
}

TEST_CASE("burstiness CSV round-trips, including an undefined memory") {
    BurstinessReport a;
    a.team_id = "acqualta";
    a.emotion = Emotion::joy;
    a.n_tau = 3;
    a.mu_tau = 3.0;
    a.sigma_tau = 0.816496580927726;
    a.r = 0.2721655269759087;
    a.b = -0.5721224617320373;
    a.b_n = finite_size_burstiness(a.r, a.n_tau);
    a.memory = -0.5;
    a.lag = 1;

    BurstinessReport b;
    b.team_id = "pietra,bella";  // comma forces CSV quoting
    b.emotion = Emotion::anger;
    b.n_tau = 9;
    b.mu_tau = 86400;
    b.sigma_tau = 0;
    b.r = 0;
    b.b = -1;
    b.b_n = -1;
    b.memory = std::nullopt;
    b.lag = 2;

    const std::string csv = burstiness_csv({a, b});
    // The undefined memory serializes as an empty field.
    CHECK(csv.find(",-1,-1,,2\n") != std::string::npos);

    std::istringstream in(csv);
    auto back = burstiness_from_csv(in);
    REQUIRE(back.size() == 2);
    CHECK(back[0].team_id == "acqualta");
    CHECK(back[0].emotion == Emotion::joy);
    CHECK(back[0].n_tau == 3);
    CHECK(back[0].r == a.r);      // exact: shortest round-trip formatting
    CHECK(back[0].b == a.b);
    CHECK(back[0].b_n == a.b_n);
    REQUIRE(back[0].memory.has_value());
    CHECK(*back[0].memory == -0.5);
    CHECK(back[1].team_id == "pietra,bella");
    CHECK_FALSE(back[1].memory.has_value());
    CHECK(back[1].lag == 2);
}

TEST_CASE("burstiness_from_csv validation") {
    std::istringstream empty("");
    CHECK_THROWS_AS(burstiness_from_csv(empty), ParseError);
    std::istringstream bad_header("team,b\nx,1\n");
    CHECK_THROWS_AS(burstiness_from_csv(bad_header), ParseError);
    std::istringstream short_row("team_id,emotion,n_tau,mu,sigma,r,B,B_n,M,lag\nx,joy,3\n");
    CHECK_THROWS_AS(burstiness_from_csv(short_row), ParseError);
}

TEST_CASE("distance_matrix_csv golden output") {
    DistanceMatrix dm({"a", "b"}, {0, 1.5, 1.5, 0});
    CHECK(distance_matrix_csv(dm) ==
          "team_id,a,b\n"
          "a,0,1.5\n"
          "b,1.5,0\n");
}

TEST_CASE("dendrogram and partition CSV golden output") {
    DistanceMatrix dm({"a", "b", "c"}, {0, 1, 10, 1, 0, 10, 10, 10, 0});
    Dendrogram dg = hierarchical_cluster(dm);
    CHECK(dendrogram_csv(dg) ==
          "step,left,right,distance,size\n"
          "0,0,1,1,2\n"
          "1,2,3,10,3\n");
    Partition p = cut_dendrogram(dg, 5.0);
    CHECK(partition_csv(p) ==
          "team_id,cluster\n"
          "a,1\n"
          "b,1\n"
          "c,2\n");
}

TEST_CASE("profiles_json carries counts and five-number summaries") {
    ClusterProfile cp;
    cp.cluster = 1;
    cp.size = 2;
    cp.geo_counts = {{"North", 2}};
    cp.league_counts = {{"A", 1}, {"B", 1}};
    cp.pci_tertile_counts = {{"Q1", 2}};
    cp.mv_tertile_counts = {{"Q3", 2}};
    cp.final_rank = {1, 1.25, 1.5, 1.75, 2};
    const std::string doc = profiles_json({cp});
    CHECK(doc.find("\"cluster\": 1") != std::string::npos);
    CHECK(doc.find("\"North\": 2") != std::string::npos);
    CHECK(doc.find("\"q1\": 1.25") != std::string::npos);
    CHECK(doc.find("\"max\": 2") != std::string::npos);
    CHECK(doc.back() == '\n');
}

TEST_CASE("ablation_json names every residual row") {
    DesignMatrix dm;
    dm.col_names = {"intercept", "x"};
    dm.row_labels = {"alfa", "bravo", "china", "delta"};
    dm.values = {1, 0, 1, 1, 1, 2, 1, 3};
    dm.y = {1.0, 3.1, 4.9, 7.2};
    AblationResult res = ablation_compare(dm, "x");
    const std::string doc = ablation_json(res, dm.row_labels, {"omitted_team"});
    CHECK(doc.find("\"dropped\": \"x\"") != std::string::npos);
    CHECK(doc.find("\"alfa\"") != std::string::npos);
    CHECK(doc.find("\"delta\"") != std::string::npos);
    CHECK(doc.find("\"excluded_teams\"") != std::string::npos);
    CHECK(doc.find("omitted_team") != std::string::npos);
    CHECK(doc.find("\"r_squared\"") != std::string::npos);
    CHECK(doc.find("\"predictors\"") != std::string::npos);
    // Both fits appear, with the full one listing predictor x.
    CHECK(doc.find("\"full\"") != std::string::npos);
    CHECK(doc.find("\"reduced\"") != std::string::npos);
}

TEST_CASE("sanitize_id keeps filename-safe characters only") {
    CHECK(sanitize_id("acqualta") == "acqualta");
    CHECK(sanitize_id("AC-Milan_2") == "AC-Milan_2");
    CHECK(sanitize_id("a b/c") == "a_b_c");
    CHECK(sanitize_id("..") == "__");
    CHECK(sanitize_id("") == "_");
    CHECK(sanitize_id("caffè") != "caffè");  // non-ASCII bytes are replaced
}

TEST_CASE("read/write text files") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "tifo_io_test";
    fs::create_directories(dir);
    const fs::path file = dir / "content.txt";
    const std::string payload = "line1\nline2\n\xE2\x9C\x93\n";
    write_text_file(file, payload);
    CHECK(read_text_file(file) == payload);
    CHECK_THROWS_AS(read_text_file(dir / "missing.txt"), Error);
    CHECK_THROWS_AS(write_text_file(dir / "no" / "such" / "dir" / "f.txt", "x"), Error);
    fs::remove_all(dir);
}
