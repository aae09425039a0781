#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "magicfib/braid.hpp"
#include "magicfib/errors.hpp"
#include "magicfib/garside.hpp"
#include "oracles.hpp"

namespace br = mfib::braid;
using br::BraidWord;

namespace {

BraidWord random_word(oracle::Rng& rng, int n, int len) {
    std::vector<int> v;
    for (int i = 0; i < len; ++i) {
        int g = static_cast<int>(oracle::uniform(rng, 1, n - 1));
        v.push_back(oracle::uniform(rng, 0, 1) ? g : -g);
    }
    return BraidWord(n, v);
}

br::CanonicalForm nf(const std::string& s) { return br::normal_form(BraidWord::parse(s)); }

}  // namespace

TEST_SUITE("braid") {

TEST_CASE("T_{m,p} words") {
    CHECK(br::tmp(6, 2).to_string() == "B6: 1 1 2 3 4 5 1 1 2 3 4 -5");
    CHECK(br::tmp(3, 1) == BraidWord(3, {1, 1, -2}));
    CHECK(br::tmp(4, 1) == BraidWord(4, {1, 1, 2, -3}));
    CHECK_THROWS_AS(br::tmp(2, 1), mfib::DomainError);
}

TEST_CASE("forgetting the first strand") {
    CHECK(br::forget_strand(br::tmp(6, 2), 1) == BraidWord(5, {1, 2, 3, 4, 1, 2, 3, -4}));
    CHECK(br::forget_strand(br::tmp(4, 1), 1) == BraidWord(3, {1, -2}));
    CHECK(br::forget_strand(br::tmp(5, 1), 1) == BraidWord(4, {1, 2, -3}));
    oracle::Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        auto w = random_word(rng, 6, 20);
        auto f = br::forget_strand(w, static_cast<int>(oracle::uniform(rng, 1, 6)));
        CHECK(f.strands() == 5);
        CHECK(f.length() <= w.length());
    }
}

TEST_CASE("word text round trip") {
    oracle::Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        auto w = random_word(rng, static_cast<int>(oracle::uniform(rng, 2, 9)), 15);
        CHECK(BraidWord::parse(w.to_string()) == w);
    }
    CHECK(BraidWord::parse("1 1 2 3 4 5 1 1 2 3 4 -5").strands() == 6);
    CHECK_THROWS_AS(BraidWord::parse("B3: 1 3"), mfib::DomainError);
    CHECK_THROWS_AS(BraidWord::parse("B3: 1 x"), mfib::DomainError);
}

TEST_CASE("permutations") {
    CHECK(br::permutation(BraidWord(5, {1, 2, 2, 3, 4})).cycle_type() == std::vector<int>{3, 2});
    CHECK(br::permutation(BraidWord(4)).is_identity());
    CHECK(br::permutation(br::full_twist(5)).is_identity());
    oracle::Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        auto w = random_word(rng, 7, 12);
        auto perm = br::permutation(w);
        CHECK(br::permutation(br::permutation_braid(perm)) == perm);
    }
}

TEST_CASE("family words") {
    CHECK(br::sigma_hk(3) == BraidWord(5, {1, 2, 3, 4, 1, 2}));
    CHECK(br::psi(6) == BraidWord(6, {5, 4, 3, 2, 1, 5, 4, 3, 5, 4}));
    CHECK_THROWS_AS(br::psi(4), mfib::DomainError);
    for (int m = 2; m <= 7; ++m) CHECK(br::normal_form(br::full_twist(m)) == br::normal_form(br::full_twist_alt(m)));
}

TEST_CASE("normal form anchors") {
    auto d = nf("B3: 1 2 1");
    CHECK(d.inf == 1);
    CHECK(d.factors.empty());
    auto e = nf("B3: 1 -1");
    CHECK(e.inf == 0);
    CHECK(e.factors.empty());
    CHECK(br::normal_form(br::tmp(4, 4)) == br::normal_form(br::tmp(4, 1) * br::full_twist(4)));
    CHECK(br::normal_form(br::full_twist(4)).inf == 2);
}

TEST_CASE("normal forms decide equality") {
    oracle::Rng rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(oracle::uniform(rng, 2, 6));
        auto w = random_word(rng, n, 16);
        auto form = br::normal_form(w);
        CHECK(oracle::burau_equal(n, form.to_word().letters(), w.letters()));
        CHECK(br::normal_form(form.to_word()) == form);
        // Inserting a trivial pair somewhere does not change the form.
        auto v = w.letters();
        const int g = static_cast<int>(oracle::uniform(rng, 1, n - 1));
        const auto at = static_cast<std::ptrdiff_t>(oracle::uniform(rng, 0, static_cast<long>(v.size())));
        v.insert(v.begin() + at, {g, -g});
        CHECK(br::normal_form(BraidWord(n, v)) == form);
    }
}

TEST_CASE("normal form respects multiplication") {
    oracle::Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(oracle::uniform(rng, 2, 6));
        auto u = random_word(rng, n, 10);
        auto v = random_word(rng, n, 10);
        CHECK(br::product(br::normal_form(u), br::normal_form(v)) == br::normal_form(u * v));
    }
}

TEST_CASE("left weighted factors") {
    oracle::Rng rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(oracle::uniform(rng, 3, 7));
        auto form = br::normal_form(random_word(rng, n, 25));
        for (const auto& f : form.factors) {
            CHECK_FALSE(br::is_identity(n, f));
            CHECK_FALSE(br::is_delta(n, f));
        }
        for (std::size_t i = 0; i + 1 < form.factors.size(); ++i) {
            // Every starting generator of the right factor is a finishing generator of the left one.
            const auto& a = form.factors[i];
            const auto& b = form.factors[i + 1];
            std::array<std::uint8_t, br::kMaxGarsideStrands> inv{};
            for (int k = 0; k < n; ++k) inv[a.p[k]] = static_cast<std::uint8_t>(k);
            for (int k = 0; k + 1 < n; ++k)
                if (b.p[k] > b.p[k + 1]) CHECK(inv[k] > inv[k + 1]);
        }
    }
}

TEST_CASE("super summit sets") {
    auto delta = br::super_summit_set(BraidWord(3, {1, 2, 1}));
    CHECK(delta.size() == 1);
    auto s1 = br::super_summit_set(BraidWord(3, {1}));
    CHECK(s1.size() == 2);
    CHECK(std::binary_search(s1.begin(), s1.end(), br::normal_form(BraidWord(3, {1}))));
    CHECK(std::binary_search(s1.begin(), s1.end(), br::normal_form(BraidWord(3, {2}))));

    auto a = br::super_summit_set(br::braid_a_prime());
    auto b = br::super_summit_set(br::braid_b_prime());
    CHECK(a.size() == 4);
    CHECK(a == b);
}

TEST_CASE("super summit set is closed under simple conjugation") {
    for (const auto& w : {br::braid_b_prime(), br::tmp(6, 2), br::psi(6)}) {
        auto set = br::super_summit_set(w);
        const int n = w.strands();
        std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), std::uint8_t{0});
        do {
            br::Simple s;
            std::copy(perm.begin(), perm.end(), s.p.begin());
            for (const auto& x : set) {
                auto y = br::conjugate_by_simple(x, s);
                const bool inside = std::binary_search(set.begin(), set.end(), y);
                CHECK((inside || y.inf < x.inf || y.sup() > x.sup()));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("conjugacy decisions") {
    CHECK(br::are_conjugate(br::braid_a_prime(), br::braid_b_prime()));
    CHECK(br::are_conjugate(br::forget_strand(br::tmp(6, 2), 1), BraidWord(5, {1, 2, 3, 4, 1, 2})));
    CHECK(br::are_conjugate(br::psi(6), br::tmp(6, 2)));
    CHECK(br::forget_strand(br::tmp(4, 1), 1) == BraidWord(3, {1, -2}));
    CHECK_FALSE(br::are_conjugate(BraidWord(2, {1}), BraidWord(2, {-1})));
    CHECK_FALSE(br::are_conjugate(BraidWord(4, {1, 2, 3}), BraidWord(4, {1, 1, 3})));
}

TEST_CASE("random conjugates are recognized") {
    oracle::Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(oracle::uniform(rng, 3, 5));
        auto x = random_word(rng, n, 8);
        auto g = random_word(rng, n, 6);
        auto y = g * x * g.inverse();
        CHECK(br::are_conjugate(x, y));
        CHECK(x.exponent_sum() == y.exponent_sum());
        CHECK(br::permutation(x).cycle_type() == br::permutation(y).cycle_type());
    }
}

TEST_CASE("the closure refuses large strand counts") {
    CHECK_THROWS_AS(br::super_summit_set(br::tmp(12, 5)), mfib::LimitExceeded);
    CHECK_THROWS_AS(br::super_summit_set(br::braid_b_prime(), 2), mfib::LimitExceeded);
}

}
