#include <doctest.h>

#include <array>
#include <numeric>
#include <set>

#include "magicfib/contfrac.hpp"
#include "magicfib/errors.hpp"
#include "oracles.hpp"

namespace cf = mfib::cf;
using cf::Int;

namespace {

Int bracket_of(std::initializer_list<Int> w) { return cf::bracket(std::vector<Int>(w)); }

using Mat = std::array<Int, 4>;
Mat mul(const Mat& a, const Mat& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

TEST_SUITE("contfrac") {

TEST_CASE("brackets") {
    CHECK(bracket_of({1, 1}) == 2);
    CHECK(bracket_of({1, 3, 1}) == 5);
    CHECK(bracket_of({3, 1, 2}) == 11);
    CHECK_THROWS_AS(cf::bracket(std::vector<Int>{}), mfib::DomainError);
}

TEST_CASE("bracket palindrome and the matrix identity") {
    oracle::Rng rng(37);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Int> w(static_cast<std::size_t>(oracle::uniform(rng, 1, 10)));
        for (auto& v : w) v = oracle::uniform(rng, 1, 9);
        std::vector<Int> r(w.rbegin(), w.rend());
        CHECK(cf::bracket(w) == cf::bracket(r));

        Mat m{1, 0, 0, 1};
        for (Int v : w) m = mul(m, {v, 1, 1, 0});
        const std::span<const Int> s(w);
        auto br = [](std::span<const Int> x) { return x.empty() ? Int{1} : cf::bracket(x); };
        CHECK(m[0] == br(s));
        CHECK(m[1] == br(s.first(s.size() - 1)));
        CHECK(m[2] == br(s.subspan(1)));
        CHECK(m[3] == (s.size() == 1 ? Int{0} : br(s.subspan(1, s.size() - 2))));
    }
}

TEST_CASE("parity of the continued fraction") {
    CHECK(cf::cf_with_parity(11, 3) == std::vector<Int>{3, 1, 2});
    CHECK(cf::cf_with_parity(4, 5) == std::vector<Int>{1, 4});
    CHECK(cf::cf_with_parity(1, 1) == std::vector<Int>{1});
    CHECK_THROWS_AS(cf::cf_with_parity(4, 6), mfib::DomainError);
    for (Int x = 1; x < 60; ++x)
        for (Int y = 1; y < 60; ++y) {
            if (std::gcd(x, y) != 1 || (x == 1 && y == 1)) continue;
            auto w = cf::cf_with_parity(x, y);
            CHECK(w.size() % 2 == (x > y ? 1u : 0u));
            const std::span<const Int> s(w);
            CHECK(cf::bracket(s) == std::max(x, y));
            CHECK((s.size() == 1 ? Int{1} : cf::bracket(s.subspan(1))) == std::min(x, y));
        }
}

TEST_CASE("p anchors") {
    CHECK(cf::p_of(11, 3) == 5);
    CHECK(cf::p_of(5, 4) == 7);
    for (Int k = 2; k < 30; ++k) CHECK(cf::p_of(k - 1, k) == 2);
    CHECK(cf::monodromy_of(11, 3) == cf::Monodromy{15, 5});
    CHECK(cf::monodromy_of(1, 2) == cf::Monodromy{4, 2});
    CHECK(cf::monodromy_of(2, 3) == cf::Monodromy{6, 2});
    CHECK(cf::monodromy_of(1, 1) == cf::Monodromy{3, 1});
}

TEST_CASE("congruence and pair relation for x + y <= 200") {
    for (Int s = 3; s <= 200; ++s)
        for (Int x = 1; x < s; ++x) {
            const Int y = s - x;
            if (std::gcd(x, y) != 1) continue;
            const auto w = cf::cf_with_parity(x, y);
            const int sign = w.size() % 2 == 0 ? 1 : -1;
            const Int p = cf::p_of(x, y);
            CHECK(p % s == oracle::brute_p(x, y, sign) % s);
            CHECK((cf::p_of(x, y) + cf::p_of(y, x)) % s == 0);
        }
}

TEST_CASE("bijection onto units for m <= 60") {
    for (Int m = 3; m <= 60; ++m) {
        std::set<Int> hit;
        for (Int x = 1; x < m - 1; ++x) {
            const Int y = m - 1 - x;
            if (std::gcd(x, y) != 1) continue;
            hit.insert(cf::monodromy_of(x, y).p);
        }
        std::set<Int> units;
        for (Int p = 1; p <= m - 1; ++p)
            if (std::gcd(p, m - 1) == 1) units.insert(p);
        CHECK_MESSAGE(hit == units, m);
    }
}

TEST_CASE("round trip for x + y <= 100") {
    for (Int s = 2; s <= 100; ++s)
        for (Int x = 1; x < s; ++x) {
            const Int y = s - x;
            if (std::gcd(x, y) != 1) continue;
            const auto mp = cf::monodromy_of(x, y);
            CHECK(cf::class_of_monodromy(mp.m, mp.p) == cf::PairClass{x, y});
            CHECK(cf::class_of_monodromy(mp.m, mp.p + 3 * (mp.m - 1)) == cf::PairClass{x, y});
        }
    CHECK(cf::class_of_monodromy(15, 5) == cf::PairClass{11, 3});
    CHECK(cf::class_of_monodromy(4, 2) == cf::PairClass{1, 2});
    CHECK(cf::class_of_monodromy(6, 2) == cf::PairClass{2, 3});
}

TEST_CASE("reducible families are rejected") {
    for (Int m = 3; m <= 40; ++m)
        for (Int p = 1; p < m; ++p) {
            if (cf::is_reducible_family(m, p))
                CHECK_THROWS_AS(cf::class_of_monodromy(m, p), mfib::DomainError);
            else
                CHECK_NOTHROW(cf::class_of_monodromy(m, p));
        }
}

TEST_CASE("fiber sequences") {
    auto a = cf::fiber_from_sequence(std::vector<Int>{3});
    CHECK(a.monodromy == cf::Monodromy{5, 1});
    CHECK(a.cls == mfib::magic::FiberClass{3, 1, 0});
    auto b = cf::fiber_from_sequence(std::vector<Int>{1, 1});
    CHECK(b.monodromy == cf::Monodromy{4, 2});
    CHECK(b.cls == mfib::magic::FiberClass{1, 2, 0});
    auto c = cf::fiber_from_sequence(std::vector<Int>{3, 1, 2});
    CHECK(c.monodromy == cf::Monodromy{15, 5});
    CHECK(c.cls == mfib::magic::FiberClass{11, 3, 0});
    CHECK_THROWS_AS(cf::fiber_from_sequence(std::vector<Int>{}), mfib::DomainError);
    CHECK_THROWS_AS(cf::fiber_from_sequence(std::vector<Int>{2, 0}), mfib::DomainError);
}

TEST_CASE("fiber sequences agree with the monodromy of their class") {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Int> q(static_cast<std::size_t>(oracle::uniform(rng, 1, 6)));
        for (auto& v : q) v = oracle::uniform(rng, 1, 4);
        auto r = cf::fiber_from_sequence(q);
        CHECK(cf::monodromy_of(r.cls.x, r.cls.y) == r.monodromy);
    }
}

TEST_CASE("minimal monodromies") {
    auto six = cf::minimal_monodromy(6);
    CHECK(six.ps == std::vector<Int>{2, 3});
    auto three = cf::minimal_monodromy(3);
    CHECK(three.ps == std::vector<Int>{1});
    auto seven = cf::minimal_monodromy(7);
    CHECK(seven.ps == std::vector<Int>{5, 1});
}

}
