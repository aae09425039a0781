#include "magicfib/laurent.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "magicfib/errors.hpp"

namespace mfib::laurent {

MultivarLaurent::MultivarLaurent(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultivarLaurent MultivarLaurent::constant(std::vector<std::string> vars, const mpz_class& c) {
    Exponents e(vars.size(), 0);
    return monomial(std::move(vars), std::move(e), c);
}

MultivarLaurent MultivarLaurent::monomial(std::vector<std::string> vars, Exponents e, const mpz_class& c) {
    if (e.size() != vars.size()) throw DomainError("exponent vector length does not match the variables");
    MultivarLaurent p(std::move(vars));
    p.add_term(e, c);
    return p;
}

MultivarLaurent MultivarLaurent::variable(std::vector<std::string> vars, const std::string& name, int power) {
    MultivarLaurent p(vars);
    Exponents e(vars.size(), 0);
    e[p.index_of(name)] = power;
    p.add_term(e, 1);
    return p;
}

std::size_t MultivarLaurent::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

mpz_class MultivarLaurent::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void MultivarLaurent::add_term(const Exponents& e, const mpz_class& c) {
    if (e.size() != vars_.size()) throw DomainError("exponent vector length does not match the variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultivarLaurent::require_same_vars(const MultivarLaurent& other) const {
    if (vars_ != other.vars_) throw DomainError("Laurent polynomials over different variables");
}

MultivarLaurent MultivarLaurent::operator-() const {
    MultivarLaurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultivarLaurent operator+(const MultivarLaurent& a, const MultivarLaurent& b) {
    a.require_same_vars(b);
    MultivarLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultivarLaurent operator-(const MultivarLaurent& a, const MultivarLaurent& b) { return a + (-b); }

MultivarLaurent operator*(const MultivarLaurent& a, const MultivarLaurent& b) {
    a.require_same_vars(b);
    MultivarLaurent r(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

std::string MultivarLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        mpz_class mag = abs(c);
        std::string body = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
        if (out.empty())
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
    }
    return out;
}

LaurentMatrix2::LaurentMatrix2(MultivarLaurent a, MultivarLaurent b, MultivarLaurent c, MultivarLaurent d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (const auto& x : e_)
        if (x.variables() != e_[0].variables()) throw DomainError("matrix entries over different variables");
}

LaurentMatrix2 LaurentMatrix2::identity(const std::vector<std::string>& vars) {
    auto one = MultivarLaurent::constant(vars, 1);
    auto zero = MultivarLaurent(vars);
    return {one, zero, zero, one};
}

MultivarLaurent LaurentMatrix2::det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

MultivarLaurent LaurentMatrix2::trace() const { return at(0, 0) + at(1, 1); }

MultivarLaurent LaurentMatrix2::char_poly(const std::string& u) const {
    auto x = MultivarLaurent::variable(at(0, 0).variables(), u);
    LaurentMatrix2 m(x - at(0, 0), -at(0, 1), -at(1, 0), x - at(1, 1));
    return m.det();
}

LaurentMatrix2 operator*(const LaurentMatrix2& x, const LaurentMatrix2& y) {
    return {x.at(0, 0) * y.at(0, 0) + x.at(0, 1) * y.at(1, 0), x.at(0, 0) * y.at(0, 1) + x.at(0, 1) * y.at(1, 1),
            x.at(1, 0) * y.at(0, 0) + x.at(1, 1) * y.at(1, 0), x.at(1, 0) * y.at(0, 1) + x.at(1, 1) * y.at(1, 1)};
}

LaurentMatrix2 sigma1_matrix(const std::vector<std::string>& vars, const std::string& t) {
    auto tv = MultivarLaurent::variable(vars, t);
    return {tv, tv, MultivarLaurent(vars), MultivarLaurent::constant(vars, 1)};
}

LaurentMatrix2 sigma2_inverse_matrix(const std::vector<std::string>& vars, const std::string& t) {
    auto inv = MultivarLaurent::variable(vars, t, -1);
    return {MultivarLaurent::constant(vars, 1), MultivarLaurent(vars), inv, inv};
}

namespace {
const std::vector<std::string>& t_vars() {
    static const std::vector<std::string> v{"t1", "t2", "u"};
    return v;
}
}  // namespace

LaurentMatrix2 monodromy_matrix() {
    const auto& v = t_vars();
    return sigma2_inverse_matrix(v, "t2") * sigma1_matrix(v, "t1") * sigma2_inverse_matrix(v, "t1");
}

MultivarLaurent derive_teichmuller() { return monodromy_matrix().char_poly("u"); }

Normalized unit_normalize(const MultivarLaurent& p) {
    const auto& vars = p.variables();
    const std::size_t k = vars.size();
    if (p.is_zero()) return {p, MultivarLaurent::constant(vars, 1)};

    Exponents lowest(k, std::numeric_limits<int>::max());
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < k; ++i) lowest[i] = std::min(lowest[i], e[i]);

    // Heaviest term under weights (k-1, ..., 0); ties go to the larger exponent vector.
    const Exponents* top = nullptr;
    long top_weight = 0;
    for (const auto& [e, c] : p.terms()) {
        long w = 0;
        for (std::size_t i = 0; i < k; ++i) w += static_cast<long>(k - 1 - i) * e[i];
        if (!top || w > top_weight || (w == top_weight && e > *top)) {
            top = &e;
            top_weight = w;
        }
    }
    const int sign = p.coefficient(*top) < 0 ? -1 : 1;

    MultivarLaurent out(vars);
    Exponents shifted(k);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < k; ++i) shifted[i] = e[i] - lowest[i];
        out.add_term(shifted, c * sign);
    }
    return {std::move(out), MultivarLaurent::monomial(vars, lowest, sign)};
}

Normalized change_basis(const MultivarLaurent& P, const std::vector<std::string>& new_vars,
                        const std::map<std::string, MultivarLaurent>& subst) {
    const auto& old_vars = P.variables();
    std::vector<Exponents> images;
    std::vector<int> signs;
    for (const auto& name : old_vars) {
        auto it = subst.find(name);
        const MultivarLaurent img = it != subst.end() ? it->second : MultivarLaurent::variable(new_vars, name);
        if (img.variables() != new_vars) throw DomainError("substitution for '" + name + "' uses other variables");
        if (!img.is_monomial()) throw DomainError("substitution for '" + name + "' is not a monomial");
        const auto& [e, c] = *img.terms().begin();
        if (abs(c) != 1) throw DomainError("substitution for '" + name + "' is not a unit monomial");
        images.push_back(e);
        signs.push_back(c > 0 ? 1 : -1);
    }

    MultivarLaurent out(new_vars);
    Exponents acc(new_vars.size());
    for (const auto& [e, c] : P.terms()) {
        std::fill(acc.begin(), acc.end(), 0);
        int sign = 1;
        for (std::size_t i = 0; i < old_vars.size(); ++i) {
            for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += e[i] * images[i][j];
            if (signs[i] < 0 && e[i] % 2 != 0) sign = -sign;
        }
        out.add_term(acc, c * sign);
    }
    return unit_normalize(out);
}

const MultivarLaurent& teichmuller_s() {
    static const MultivarLaurent P = [] {
        const std::vector<std::string> s{"s1", "s2", "s3"};
        std::map<std::string, MultivarLaurent> sub{
            {"t1", MultivarLaurent::variable(s, "s3")},
            {"t2", MultivarLaurent::monomial(s, {1, -1, -1})},
            {"u", MultivarLaurent::variable(s, "s2")},
        };
        return change_basis(derive_teichmuller(), s, sub).poly;
    }();
    return P;
}

poly::IntPolynomial specialize(const MultivarLaurent& P, const std::vector<long>& exponents, long unit_degree) {
    constexpr long kMaxDegree = 1L << 24;
    if (exponents.size() != P.variables().size()) throw DomainError("one exponent per variable is required");
    std::vector<std::pair<long, mpz_class>> spread;
    long top = 0;
    for (const auto& [e, c] : P.terms()) {
        long d = -unit_degree;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * exponents[i];
        if (d < 0) throw DomainError("specialization leaves a negative power; the class is outside the cone");
        if (d > kMaxDegree) throw DomainError("specialized degree is too large");
        top = std::max(top, d);
        spread.emplace_back(d, c);
    }
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(top) + 1);
    for (const auto& [d, c] : spread) coeffs[static_cast<std::size_t>(d)] += c;
    return poly::IntPolynomial(std::move(coeffs));
}

poly::IntPolynomial specialize(const MultivarLaurent& P, const std::vector<long>& exponents) {
    if (exponents.empty()) throw DomainError("one exponent per variable is required");
    return specialize(P, exponents, exponents.back());
}

}  // namespace mfib::laurent
