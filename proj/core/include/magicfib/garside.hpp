#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "magicfib/braid.hpp"

namespace mfib::braid {

inline constexpr int kMaxGarsideStrands = 32;

// Permutation braid, stored as its permutation: strand at top position i
// ends at bottom position p[i]. Entries past the strand count are zero.
struct Simple {
    std::array<std::uint8_t, kMaxGarsideStrands> p{};

    friend auto operator<=>(const Simple&, const Simple&) = default;
};

Simple simple_identity(int n);
Simple simple_delta(int n);
Simple simple_generator(int n, int i);  // sigma_i, 1-based
Simple simple_from_permutation(const Permutation& perm);
Simple compose(int n, const Simple& a, const Simple& b);  // the braid a then b
Simple tau(int n, const Simple& s);                       // Delta^-1 s Delta
Simple complement(int n, const Simple& s);                // s^-1 Delta
bool is_identity(int n, const Simple& s);
bool is_delta(int n, const Simple& s);
// Positive word crossing each pair of strands at most once.
BraidWord simple_word(int n, const Simple& s);

// Delta^inf A_1 ... A_r with (A_i, A_{i+1}) left-weighted and no A_i trivial or Delta.
struct CanonicalForm {
    int n = 2;
    int inf = 0;
    std::vector<Simple> factors;

    int sup() const { return inf + static_cast<int>(factors.size()); }
    int canonical_length() const { return static_cast<int>(factors.size()); }
    BraidWord to_word() const;
    std::string to_string() const;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b);
};

CanonicalForm normal_form(const BraidWord& b);
// Left normal form of Delta^inf s_1 ... s_k for arbitrary simple s_i.
CanonicalForm normal_form_of(int n, int inf, const std::vector<Simple>& simples);

CanonicalForm product(const CanonicalForm& a, const CanonicalForm& b);
CanonicalForm conjugate_by_simple(const CanonicalForm& x, const Simple& s);  // s^-1 x s
CanonicalForm cycling(const CanonicalForm& x);
CanonicalForm decycling(const CanonicalForm& x);

// A conjugate of b with maximal inf and minimal sup.
CanonicalForm super_summit_representative(const BraidWord& b);

// Sorted; throws LimitExceeded once more than limit elements are found.
std::vector<CanonicalForm> super_summit_set(const BraidWord& b, std::size_t limit = 200000);

// Throws LimitExceeded (an Inconclusive) when the search outgrows limit.
bool are_conjugate(const BraidWord& a, const BraidWord& b, std::size_t limit = 200000);

}  // namespace mfib::braid
