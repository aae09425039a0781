#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "magicfib/intpoly.hpp"

namespace mfib::laurent {

using Exponents = std::vector<int>;

// Integer Laurent polynomial in an ordered list of named variables.
class MultivarLaurent {
public:
    MultivarLaurent() = default;
    explicit MultivarLaurent(std::vector<std::string> vars);

    static MultivarLaurent constant(std::vector<std::string> vars, const mpz_class& c);
    static MultivarLaurent monomial(std::vector<std::string> vars, Exponents e, const mpz_class& c = 1);
    static MultivarLaurent variable(std::vector<std::string> vars, const std::string& name, int power = 1);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::map<Exponents, mpz_class>& terms() const noexcept { return terms_; }
    std::size_t index_of(const std::string& name) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    mpz_class coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const mpz_class& c);

    MultivarLaurent operator-() const;
    friend MultivarLaurent operator+(const MultivarLaurent& a, const MultivarLaurent& b);
    friend MultivarLaurent operator-(const MultivarLaurent& a, const MultivarLaurent& b);
    friend MultivarLaurent operator*(const MultivarLaurent& a, const MultivarLaurent& b);
    friend bool operator==(const MultivarLaurent& a, const MultivarLaurent& b) = default;

    // Terms printed in descending lexicographic exponent order.
    std::string to_string() const;

private:
    void require_same_vars(const MultivarLaurent& other) const;

    std::vector<std::string> vars_;
    std::map<Exponents, mpz_class> terms_;
};

class LaurentMatrix2 {
public:
    LaurentMatrix2(MultivarLaurent a, MultivarLaurent b, MultivarLaurent c, MultivarLaurent d);

    static LaurentMatrix2 identity(const std::vector<std::string>& vars);

    const MultivarLaurent& at(int row, int col) const { return e_[static_cast<std::size_t>(2 * row + col)]; }

    MultivarLaurent det() const;
    MultivarLaurent trace() const;

    // det(uI - M) with u an existing variable.
    MultivarLaurent char_poly(const std::string& u) const;

    friend LaurentMatrix2 operator*(const LaurentMatrix2& x, const LaurentMatrix2& y);
    friend bool operator==(const LaurentMatrix2& a, const LaurentMatrix2& b) = default;

private:
    std::array<MultivarLaurent, 4> e_;
};

// (t, t; 0, 1) with t a variable.
LaurentMatrix2 sigma1_matrix(const std::vector<std::string>& vars, const std::string& t);
// (1, 0; 1/t, 1/t).
LaurentMatrix2 sigma2_inverse_matrix(const std::vector<std::string>& vars, const std::string& t);

// The three-factor product M = sigma2^-1(t2) sigma1(t1) sigma2^-1(t1) over (t1, t2, u).
LaurentMatrix2 monodromy_matrix();

// det(uI - M) in variables (t1, t2, u).
MultivarLaurent derive_teichmuller();

// A polynomial split as unit * poly, where unit is a signed monomial.
struct Normalized {
    MultivarLaurent poly;
    MultivarLaurent unit;
};

// Divides by the monomial making every variable's minimum exponent zero and
// fixes the sign so the top term under the weights (k-1, ..., 1, 0) is positive.
Normalized unit_normalize(const MultivarLaurent& p);

// Substitutes each variable of P by a signed unit monomial over new_vars.
// Variables missing from subst map to themselves (they must appear in new_vars).
Normalized change_basis(const MultivarLaurent& P, const std::vector<std::string>& new_vars,
                        const std::map<std::string, MultivarLaurent>& subst);

// The teichmuller polynomial in (s1, s2, s3), normalized.
const MultivarLaurent& teichmuller_s();

// P(t^e1, ..., t^ek) / t^unit_degree as an ordinary polynomial.
poly::IntPolynomial specialize(const MultivarLaurent& P, const std::vector<long>& exponents, long unit_degree);

// Divides by t^e_k, the unit carried by the last variable.
poly::IntPolynomial specialize(const MultivarLaurent& P, const std::vector<long>& exponents);

}  // namespace mfib::laurent
