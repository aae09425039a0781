#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mfib::poly {

// Dense univariate polynomial with integer coefficients, stored low degree
// first. The zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(const mpz_class& c, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    mpz_class coeff(std::size_t i) const;
    const mpz_class& leading() const;

    IntPolynomial derivative() const;
    IntPolynomial shifted(std::size_t k) const;  // t^k * f
    mpz_class content() const;
    IntPolynomial primitive_part() const;  // positive leading coefficient

    mpq_class eval(const mpq_class& t) const;
    double eval(double t) const;
    int sign_at(const mpq_class& t) const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// t^d f(1/t): coefficients reversed, then trailing zeros dropped.
IntPolynomial reciprocal(const IntPolynomial& f);

// t^n R(t) + sign * R_*(t) for monic R.
IntPolynomial salem_boyd(const IntPolynomial& R, std::size_t n, int sign);

// Exact division; throws if b does not divide a over the integers.
IntPolynomial divexact(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial square_free_part(const IntPolynomial& f);

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& f);

// Open interval holding exactly one real root.
struct RootBracket {
    mpq_class lo;
    mpq_class hi;
    int multiplicity = 1;

    mpq_class width() const { return hi - lo; }
    mpq_class midpoint() const { return (lo + hi) / 2; }
};

// 10^-12, the default isolation tolerance.
const mpq_class& default_tolerance();

mpq_class cauchy_bound(const IntPolynomial& f);

// Number of distinct real roots in the open interval (lo, hi).
std::size_t count_real_roots_in(const IntPolynomial& f, const mpq_class& lo, const mpq_class& hi);

// All real roots, ascending.
std::vector<RootBracket> isolate_real_roots(const IntPolynomial& f);

// Shrinks an isolating bracket of a square-free polynomial until its width is <= width.
void refine(const IntPolynomial& square_free, RootBracket& b, const mpq_class& width);

RootBracket largest_real_root_bracket(const IntPolynomial& f);

// Value within tol of the largest real root, which must be positive.
mpq_class largest_real_root(const IntPolynomial& f, const mpq_class& tol = default_tolerance());

double largest_real_root_d(const IntPolynomial& f, const mpq_class& tol = default_tolerance());

// Exact comparison of the largest real roots of f and g.
std::strong_ordering compare_largest_roots(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace mfib::poly
