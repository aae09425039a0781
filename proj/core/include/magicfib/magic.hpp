#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "magicfib/intpoly.hpp"

namespace mfib::magic {

// x*alpha + y*beta + z*gamma in second homology relative to the boundary.
struct FiberClass {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    friend auto operator<=>(const FiberClass&, const FiberClass&) = default;

    std::int64_t content() const;  // gcd of the coordinates
    bool primitive() const { return content() == 1; }
    FiberClass primitive_part() const;
    FiberClass canonical() const;  // swaps so that x >= y
    std::string to_string() const;
};

FiberClass parse_class(const std::string& text);  // "x,y,z" or "x,y"

struct FiberInfo {
    std::int64_t norm = 0;
    std::array<std::int64_t, 3> boundary{};
    std::int64_t punctures = 0;
    std::int64_t genus = 0;
    std::array<std::int64_t, 3> prongs{};
};

struct Genus0Kind {
    enum class Tag { AxisPair, Chain, Double, NotGenus0 };
    Tag tag = Tag::NotGenus0;
    std::int64_t n = 0;  // family parameter for Chain and Double

    friend bool operator==(const Genus0Kind&, const Genus0Kind&) = default;
    std::string to_string() const;
};

bool in_open_cone(const FiberClass& c);
std::int64_t thurston_norm(const FiberClass& c);
FiberInfo fiber_info(const FiberClass& c);
Genus0Kind genus0_classify(const FiberClass& c);

// Genus-0 primitive classes with x >= y and n boundary components, sorted.
std::vector<FiberClass> enumerate_Hn(int n);

// t^(x+y-z) - t^x - t^y - t^(x-z) - t^(y-z) + 1, obtained by specializing
// the derived teichmuller polynomial.
poly::IntPolynomial teichmuller_specialization(const FiberClass& c);

mpq_class dilatation(const FiberClass& c, const mpq_class& tol = poly::default_tolerance());
double entropy(const FiberClass& c, const mpq_class& tol = poly::default_tolerance());
double normalized_entropy(const FiberClass& c, const mpq_class& tol = poly::default_tolerance());

// Exact comparison of dilatations of two primitive cone classes.
std::strong_ordering compare_dilatation(const FiberClass& a, const FiberClass& b);

struct MinClass {
    FiberClass cls;
    mpq_class lambda;
    std::vector<FiberClass> ties;  // other classes with exactly the same dilatation
};

MinClass min_dilatation_class(int n, const mpq_class& tol = poly::default_tolerance());

}  // namespace mfib::magic
