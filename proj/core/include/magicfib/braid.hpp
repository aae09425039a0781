#pragma once

#include <string>
#include <vector>

namespace mfib::braid {

// Word in the Artin generators of B_n; letter +i is sigma_i, -i its inverse.
class BraidWord {
public:
    BraidWord() = default;
    explicit BraidWord(int strands, std::vector<int> letters = {});

    int strands() const noexcept { return n_; }
    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    long exponent_sum() const;
    BraidWord inverse() const;
    BraidWord free_reduced() const;
    BraidWord power(int k) const;
    // Same word on more strands.
    BraidWord widened(int strands) const;

    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
    friend bool operator==(const BraidWord&, const BraidWord&) = default;

    // "B6: 1 1 2 -5"
    std::string to_string() const;
    // Accepts "B6: 1 1 2 -5"; without the prefix the strand count is max|letter| + 1.
    static BraidWord parse(const std::string& text);

private:
    int n_ = 2;
    std::vector<int> letters_;
};

// Image table of the underlying permutation, 0-based: the strand starting at
// position i ends at position image[i].
struct Permutation {
    std::vector<int> image;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    bool is_identity() const;
    std::vector<int> cycle_type() const;  // descending, fixed points included
};

Permutation permutation(const BraidWord& b);

// Positive braid realizing perm in which each pair of strands crosses at most once.
BraidWord permutation_braid(const Permutation& perm);

// (sigma_1^2 sigma_2 ... sigma_{m-1})^p sigma_{m-1}^-2, freely reduced.
BraidWord tmp(int m, int p);

// Deletes the strand starting at position s (1-based) and renumbers.
BraidWord forget_strand(const BraidWord& b, int s);

BraidWord half_twist(int n);
// (sigma_1 ... sigma_{m-1})^m
BraidWord full_twist(int m);
// (sigma_1^2 sigma_2 ... sigma_{m-1})^(m-1)
BraidWord full_twist_alt(int m);

// sigma_1 ... sigma_{2k-2} sigma_1 ... sigma_{2k-4} in B_{2k-1}.
BraidWord sigma_hk(int k);
BraidWord psi(int n);

BraidWord thm1_braid_b();
BraidWord braid_a_prime();
BraidWord braid_b_prime();

}  // namespace mfib::braid
