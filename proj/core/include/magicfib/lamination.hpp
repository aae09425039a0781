#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "magicfib/braid.hpp"

namespace mfib::lam {

// Dynnikov coordinates (a_1..a_{n-2}, b_1..b_{n-2}) of an integral measured
// lamination on the n-punctured disk.
class DynnikovCoords {
public:
    DynnikovCoords(int punctures, std::vector<mpz_class> a, std::vector<mpz_class> b);

    // a = 0, b = -1: the curves enclosing consecutive punctures.
    static DynnikovCoords round_curves(int punctures);

    int punctures() const noexcept { return n_; }
    const std::vector<mpz_class>& a() const noexcept { return a_; }
    const std::vector<mpz_class>& b() const noexcept { return b_; }
    bool is_zero() const;
    mpz_class l1_norm() const;
    double log_norm() const;  // natural log of the l1 norm

    friend bool operator==(const DynnikovCoords&, const DynnikovCoords&) = default;
    std::string to_string() const;

private:
    int n_;
    std::vector<mpz_class> a_;
    std::vector<mpz_class> b_;
};

DynnikovCoords apply_generator(const DynnikovCoords& c, int g);
DynnikovCoords apply_word(const DynnikovCoords& c, const braid::BraidWord& w);

struct DilatationEstimate {
    bool converged = false;
    double lambda = 0.0;
    int iterations = 0;
    double spread = 0.0;  // max - min of the last window of per-step ratios
    int seeds_tried = 0;
    std::string note;
};

struct EstimateOptions {
    int max_iters = 2000;
    double tol = 1e-10;
    int window = 20;
    int retries = 3;
    std::uint64_t seed = 0x5eed;
};

// Growth rate of the l1 norm under repeated application of b. Reports
// not-converged (never a silent number) when the ratio does not settle or tends to 1.
DilatationEstimate estimate_dilatation(const braid::BraidWord& b, const EstimateOptions& opts = {});

}  // namespace mfib::lam
