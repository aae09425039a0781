#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "magicfib/magic.hpp"

namespace mfib::cf {

using Int = std::int64_t;

// Remainders r0 > r1 > ... > 1 > 0 and quotients of the Euclidean algorithm.
struct EuclidData {
    std::vector<Int> r;
    std::vector<Int> q;
};

EuclidData euclid(Int a, Int b);

// [w1] = w1, [w1, w2] = w1 w2 + 1, [w1..wi] = [..w(i-1)] wi + [..w(i-2)].
Int bracket(std::span<const Int> w);

// Continued fraction of max/min, odd length when x > y and even when x < y.
std::vector<Int> cf_with_parity(Int x, Int y);

Int p_of(Int x, Int y);

struct Monodromy {
    Int m = 0;
    Int p = 0;
    friend bool operator==(const Monodromy&, const Monodromy&) = default;
};

struct PairClass {
    Int x = 0;
    Int y = 0;
    friend bool operator==(const PairClass&, const PairClass&) = default;
};

// (x + y + 1, p(x, y)) with p reduced into [1, m - 1].
Monodromy monodromy_of(Int x, Int y);

// gcd(p, m - 1) != 1 signals the reducible family.
bool is_reducible_family(Int m, Int p);

PairClass class_of_monodromy(Int m, Int p);

// Classes (x, y, 0) with x + y = m - 1 whose dilatation is least, ordered by
// increasing x, with the matching braid parameters.
struct MinimalMonodromy {
    Int m = 0;
    std::vector<PairClass> classes;
    std::vector<Int> ps;
};

MinimalMonodromy minimal_monodromy(Int m);

struct FiberSequence {
    Monodromy monodromy;
    magic::FiberClass cls;
};

// Builds T_{m,p} and its fiber class from q, one (k, l) step at a time.
FiberSequence fiber_from_sequence(std::span<const Int> q);

}  // namespace mfib::cf
