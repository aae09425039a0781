#include <doctest.h>

#include <cmath>
#include <functional>

#include "magicfib/braid.hpp"
#include "magicfib/errors.hpp"
#include "magicfib/garside.hpp"
#include "magicfib/horseshoe.hpp"
#include "oracles.hpp"

namespace hs = mfib::horseshoe;
using mfib::braid::BraidWord;

namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

std::size_t necklaces(int k) {
    long total = 0;
    for (int d = 1; d <= k; ++d)
        if (k % d == 0) total += mobius(d) * (1L << (k / d));
    return static_cast<std::size_t>(total / k);
}

std::vector<std::string> words(const hs::OrbitSet& q) {
    std::vector<std::string> out;
    for (const auto& c : q) out.push_back(c.word());
    return out;
}

}  // namespace

TEST_SUITE("horseshoe") {

TEST_CASE("codes") {
    auto words_of = [](int k) {
        std::vector<std::string> out;
        for (const auto& c : hs::periodic_codes(k)) out.push_back(c.word());
        return out;
    };
    CHECK(words_of(1) == std::vector<std::string>{"0", "1"});
    CHECK(words_of(2) == std::vector<std::string>{"01"});
    CHECK(words_of(3) == std::vector<std::string>{"001", "011"});
    for (int k = 1; k <= 12; ++k) CHECK(hs::periodic_codes(k).size() == necklaces(k));
    CHECK(hs::Code("110").word() == "011");
    CHECK_THROWS_AS(hs::Code("0101"), mfib::DomainError);
    CHECK_THROWS_AS(hs::Code("012"), mfib::DomainError);
}

TEST_CASE("kneading order") {
    hs::Code zero("0"), one("1"), c01("01"), c011("011");
    CHECK(hs::itinerary_order({&zero, 0}, {&one, 0}) < 0);
    CHECK(hs::itinerary_order({&c01, 0}, {&c01, 1}) < 0);
    CHECK(hs::itinerary_order({&c011, 0}, {&c011, 1}) < 0);
    CHECK_THROWS_AS(hs::itinerary_order({&c01, 0}, {&c01, 0}), mfib::DomainError);
}

TEST_CASE("kneading order matches the tent map") {
    for (int k = 1; k <= 8; ++k)
        for (const auto& a : hs::periodic_codes(k))
            for (const auto& b : hs::periodic_codes(k + 1)) {
                const bool less = hs::itinerary_order({&a, 0}, {&b, 0}) < 0;
                CHECK(less == (oracle::tent_point(a.word()) < oracle::tent_point(b.word())));
            }
}

TEST_CASE("template braid permutations for every orbit set up to 7 points") {
    std::vector<hs::Code> pool;
    for (int k = 1; k <= 7; ++k)
        for (auto& c : hs::periodic_codes(k)) pool.push_back(c);
    int checked = 0;
    hs::OrbitSet chosen;
    std::function<void(std::size_t, int)> walk = [&](std::size_t from, int points) {
        if (points >= 2) {
            auto b = hs::braid_from_orbits(chosen);
            CHECK(mfib::braid::permutation(b).image == oracle::tent_permutation(words(chosen)));
            CHECK(b.exponent_sum() >= 0);
            ++checked;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            const int len = static_cast<int>(pool[i].period());
            if (points + len > 7) continue;
            chosen.push_back(pool[i]);
            walk(i + 1, points + len);
            chosen.pop_back();
        }
    };
    walk(0, 0);
    CHECK(checked > 100);
}

TEST_CASE("template braid anchors") {
    CHECK(hs::braid_from_orbits(hs::parse_orbit_set("0,1")) == BraidWord(2));
    CHECK(hs::braid_from_orbits(hs::parse_orbit_set("01")) == BraidWord(2, {1}));
    CHECK(hs::braid_from_orbits(hs::parse_orbit_set("0,01")) == BraidWord(3, {2}));
    CHECK(hs::braid_from_orbits(hs::parse_orbit_set("1,00101")).to_string() == "B6: 3 4 5 2 3 4 2 3 2 1");
    CHECK_THROWS_AS(hs::braid_from_orbits(hs::parse_orbit_set("0")), mfib::DomainError);
    CHECK_THROWS_AS(hs::braid_from_orbits(hs::parse_orbit_set("01,10")), mfib::DomainError);
}

TEST_CASE("orbit set text") {
    auto q = hs::parse_orbit_set("0, 110 ,01");
    CHECK(hs::format_orbit_set(q) == "0,011,01");
    CHECK_THROWS_AS(hs::parse_orbit_set(""), mfib::DomainError);
}

TEST_CASE("duplicate codes are not horseshoe braids") {
    CHECK_FALSE(hs::is_template_embeddable_distinct({"01", "10"}));
    CHECK(hs::is_template_embeddable_distinct({"0", "1", "01"}));
    CHECK_FALSE(hs::is_template_embeddable_distinct({"001", "001"}));
    CHECK_FALSE(hs::is_template_embeddable_distinct({"0101", "01"}));
    CHECK(hs::is_template_embeddable_distinct({"001", "011"}));
}

TEST_CASE("certificates for (6,2) and (8,2)") {
    for (auto [m, p] : {std::pair{6, 2}, std::pair{8, 2}}) {
        auto cert = hs::horseshoe_certificate(m, p);
        REQUIRE(cert.found);
        CHECK(cert.braid.strands() == m);
        CHECK(hs::verify_certificate(m, p, cert));
        const auto target = mfib::braid::tmp(m, p) * mfib::braid::full_twist(m).power(cert.twist_power);
        CHECK(mfib::braid::are_conjugate(hs::braid_from_orbits(cert.orbits), target));
    }
}

TEST_CASE("certificate arguments") {
    CHECK_THROWS_AS(hs::horseshoe_certificate(7, 2), mfib::DomainError);
    hs::CertificateOptions tiny;
    tiny.budget = 3;
    auto cert = hs::horseshoe_certificate(8, 2, tiny);
    CHECK_FALSE(cert.found);
    CHECK(cert.note == "budget exhausted");
}

}
