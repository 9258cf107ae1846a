#include <doctest.h>

#include <cstdlib>
#include <random>

#include "tifo/util.hpp"

using namespace tifo;

TEST_CASE("splitmix64 matches the reference stream") {
    // First outputs of the reference generator seeded with 0.
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    std::uint64_t s = splitmix64(0);
    CHECK(splitmix64(s) != s);
}

TEST_CASE("splitmix64 is a sensitive function of its input") {
    CHECK(splitmix64(1) != splitmix64(2));
    CHECK(splitmix64(0x8000000000000000ULL) != splitmix64(0));
}

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("derive_seed separates tasks and indices") {
    const std::uint64_t master = 42;
    CHECK(derive_seed(master, "kmeans", 0) == derive_seed(master, "kmeans", 0));
    CHECK(derive_seed(master, "kmeans", 0) != derive_seed(master, "kmeans", 1));
    CHECK(derive_seed(master, "kmeans", 0) != derive_seed(master, "simulate", 0));
    CHECK(derive_seed(master, "kmeans", 0) != derive_seed(master + 1, "kmeans", 0));
}

TEST_CASE("format_double round-trips exactly") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(0.0) == "0");

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(-1e6, 1e6);
    std::exponential_distribution<double> expo(1e-3);
    for (int i = 0; i < 1000; ++i) {
        const double v = i % 2 == 0 ? uni(rng) : expo(rng);
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    // A value needing all 17 digits.
    const double tricky = 0.1 + 0.2;
    CHECK(std::strtod(format_double(tricky).c_str(), nullptr) == tricky);
}

TEST_CASE("hex64 is fixed-width lowercase") {
    CHECK(hex64(0) == "0000000000000000");
    CHECK(hex64(0xdeadbeefULL) == "00000000deadbeef");
    CHECK(hex64(0xffffffffffffffffULL) == "ffffffffffffffff");
}
