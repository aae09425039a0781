#include <doctest.h>

#include <cmath>

#include "magicfib/errors.hpp"
#include "magicfib/magic.hpp"
#include "oracles.hpp"

namespace mg = mfib::magic;
using mg::FiberClass;

namespace {

std::vector<oracle::Triple> as_triples(const std::vector<FiberClass>& v) {
    std::vector<oracle::Triple> out;
    for (const auto& c : v) out.push_back({c.x, c.y, c.z});
    return out;
}

double root_of(const FiberClass& c) { return oracle::largest_root_scan(oracle::f_closed(c.x, c.y, c.z), 1e-5L); }

}  // namespace

TEST_SUITE("magic") {

TEST_CASE("cone membership and norm") {
    CHECK(mg::in_open_cone({1, 1, 0}));
    CHECK_FALSE(mg::in_open_cone({1, 0, 0}));
    CHECK(mg::in_open_cone({3, 2, 1}));
    CHECK_FALSE(mg::in_open_cone({2, 2, 2}));
    CHECK(mg::thurston_norm({1, 1, 0}) == 2);
    CHECK(mg::thurston_norm({3, 2, 1}) == 4);
    CHECK(mg::thurston_norm({5, 3, 2}) == 6);
    CHECK_THROWS_AS(mg::thurston_norm({1, 0, 0}), mfib::DomainError);
}

TEST_CASE("fiber data") {
    auto a = mg::fiber_info({1, 1, 0});
    CHECK(a.boundary == std::array<std::int64_t, 3>{1, 1, 2});
    CHECK(a.punctures == 4);
    CHECK(a.genus == 0);
    CHECK(a.prongs == std::array<std::int64_t, 3>{1, 1, 1});
    auto b = mg::fiber_info({2, 1, 0});
    CHECK(b.boundary == std::array<std::int64_t, 3>{1, 1, 3});
    CHECK(b.prongs == std::array<std::int64_t, 3>{2, 1, 1});
    auto c = mg::fiber_info({5, 3, 2});
    CHECK(c.boundary == std::array<std::int64_t, 3>{5, 1, 2});
    CHECK(c.punctures == 8);
    CHECK(c.prongs == std::array<std::int64_t, 3>{1, 3, 2});
    CHECK_THROWS_AS(mg::fiber_info({2, 2, 0}), mfib::DomainError);
}

TEST_CASE("prong balance for every primitive class of norm at most 30") {
    int checked = 0;
    for (long z = -30; z <= 30; ++z)
        for (long x = std::max(1L, z + 1); x + std::max(1L, z + 1) - z <= 30; ++x)
            for (long y = std::max(1L, z + 1); x + y - z <= 30; ++y) {
                FiberClass c{x, y, z};
                if (!c.primitive()) continue;
                auto fi = mg::fiber_info(c);
                long sum = 0;
                for (int i = 0; i < 3; ++i) sum += fi.boundary[i] * (2 - fi.prongs[i]);
                CHECK(sum == 4 - 4 * fi.genus);
                CHECK(fi.genus >= 0);
                for (auto p : fi.prongs) CHECK(p >= 1);
                ++checked;
            }
    CHECK(checked > 1000);
}

TEST_CASE("genus zero families") {
    CHECK(mg::genus0_classify({7, 4, 3}).to_string() == "Double(3)");
    CHECK(mg::genus0_classify({5, 1, 0}).tag == mg::Genus0Kind::Tag::AxisPair);
    CHECK(mg::genus0_classify({4, 3, 1}).tag == mg::Genus0Kind::Tag::NotGenus0);
    CHECK(mg::genus0_classify({3, 2, 1}).to_string() == "Chain(2)");
    CHECK(mg::genus0_classify({2, 3, 1}).to_string() == "Chain(2)");
}

TEST_CASE("classification agrees with the genus for norm at most 40") {
    for (long z = -40; z <= 40; ++z)
        for (long x = std::max(1L, z + 1); x + std::max(1L, z + 1) - z <= 40; ++x)
            for (long y = std::max(1L, z + 1); y <= x && x + y - z <= 40; ++y) {
                FiberClass c{x, y, z};
                if (!c.primitive()) continue;
                const bool g0 = mg::fiber_info(c).genus == 0;
                const bool tagged = mg::genus0_classify(c).tag != mg::Genus0Kind::Tag::NotGenus0;
                CHECK_MESSAGE(g0 == tagged, c.to_string());
            }
}

TEST_CASE("H_n anchors and exhaustive agreement") {
    CHECK(mg::enumerate_Hn(6) == std::vector<FiberClass>{{3, 1, 0}, {3, 2, 1}});
    CHECK(mg::enumerate_Hn(5) == std::vector<FiberClass>{{2, 1, 0}});
    CHECK(mg::enumerate_Hn(10) == std::vector<FiberClass>{{5, 3, 0}, {7, 1, 0}, {7, 4, 3}});
    for (int n = 4; n <= 30; ++n) CHECK_MESSAGE(as_triples(mg::enumerate_Hn(n)) == oracle::brute_Hn(n), n);
    CHECK_THROWS_AS(mg::enumerate_Hn(3), mfib::DomainError);
}

TEST_CASE("dilatation anchors") {
    CHECK(mg::dilatation({1, 1, 0}).get_d() == doctest::Approx(3.732051).epsilon(1e-6));
    CHECK(mg::dilatation({6, 5, 4}).get_d() == doctest::Approx(1.72208).epsilon(5e-6));
    CHECK(mg::dilatation({5, 3, 0}).get_d() == doctest::Approx(1.41345).epsilon(5e-6));
    CHECK(mg::normalized_entropy({1, 1, 0}) == doctest::Approx(2 * std::log(2 + std::sqrt(3.0))).epsilon(1e-10));
    CHECK_THROWS_AS(mg::dilatation({2, 2, 0}), mfib::DomainError);
}

TEST_CASE("dilatation matches a floating point root scan") {
    oracle::Rng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        long z = oracle::uniform(rng, -5, 8);
        FiberClass c{z + oracle::uniform(rng, 1, 12), z + oracle::uniform(rng, 1, 12), z};
        if (!mg::in_open_cone(c) || !c.primitive()) continue;
        CHECK(mg::dilatation(c).get_d() == doctest::Approx(root_of(c)).epsilon(1e-9));
    }
}

TEST_CASE("symmetry, homogeneity and the normalized entropy floor") {
    oracle::Rng rng(31);
    const double floor = 2 * std::log(2 + std::sqrt(3.0));
    for (int trial = 0; trial < 200; ++trial) {
        long z = oracle::uniform(rng, -10, 10);
        FiberClass c{z + oracle::uniform(rng, 1, 20), z + oracle::uniform(rng, 1, 20), z};
        if (!mg::in_open_cone(c)) continue;
        c = c.primitive_part();
        CHECK(mg::compare_dilatation(c, {c.y, c.x, c.z}) == std::strong_ordering::equal);
        CHECK(mg::normalized_entropy(c) >= floor - 1e-9);
        const long s = oracle::uniform(rng, 2, 4);
        CHECK(mg::normalized_entropy({s * c.x, s * c.y, s * c.z}) == doctest::Approx(mg::normalized_entropy(c)).epsilon(1e-12));
        CHECK(mg::entropy({s * c.x, s * c.y, s * c.z}) == doctest::Approx(mg::entropy(c) / static_cast<double>(s)).epsilon(1e-12));
    }
}

TEST_CASE("entropy decreases along (k, k+c)") {
    for (long c = 1; c <= 5; ++c)
        for (long k = 1; k < 20; ++k)
            CHECK(mg::entropy({k, k + c, 0}) > mg::entropy({k + 1, k + 1 + c, 0}));
}

TEST_CASE("least dilatation in small H_n") {
    auto m4 = mg::min_dilatation_class(4);
    CHECK(m4.cls == FiberClass{1, 1, 0});
    auto m6 = mg::min_dilatation_class(6);
    CHECK(m6.cls == FiberClass{3, 2, 1});
    CHECK(m6.lambda.get_d() == doctest::Approx(2.08102).epsilon(5e-6));
    auto m8 = mg::min_dilatation_class(8);
    CHECK(m8.cls == FiberClass{5, 3, 2});
    CHECK(m8.lambda.get_d() == doctest::Approx(1.72208).epsilon(5e-6));
    CHECK(m8.ties.empty());
}

TEST_CASE("equal dilatations in different H_n compare equal") {
    CHECK(mg::compare_dilatation({5, 1, 0}, {3, 2, 1}) == std::strong_ordering::equal);
    CHECK(mg::compare_dilatation({7, 4, 3}, {5, 3, 0}) == std::strong_ordering::greater);
}

TEST_CASE("class parsing") {
    CHECK(mg::parse_class("5,3,2") == FiberClass{5, 3, 2});
    CHECK(mg::parse_class("11,3") == FiberClass{11, 3, 0});
    CHECK_THROWS_AS(mg::parse_class("1"), mfib::DomainError);
    CHECK_THROWS_AS(mg::parse_class("1,x,2"), mfib::DomainError);
}

}
