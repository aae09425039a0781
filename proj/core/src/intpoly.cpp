#include "magicfib/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "magicfib/errors.hpp"

namespace mfib::poly {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

const mpz_class& IntPolynomial::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<mpz_class> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
}

mpq_class IntPolynomial::eval(const mpq_class& t) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double IntPolynomial::eval(double t) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
}

int IntPolynomial::sign_at(const mpq_class& t) const {
    // q^d f(p/q) has the sign of f(p/q) since q > 0.
    if (is_zero()) return 0;
    const mpz_class& p = t.get_num();
    const mpz_class& q = t.get_den();
    mpz_class acc = coeffs_.back();
    mpz_class qpow = 1;
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        qpow *= q;
        acc = acc * p + coeffs_[i] * qpow;
    }
    return sgn(acc);
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit = mag == 1 && i > 0;
        if (!unit) out += mag.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

IntPolynomial reciprocal(const IntPolynomial& f) {
    if (f.is_zero()) throw DomainError("reciprocal of the zero polynomial is undefined");
    std::vector<mpz_class> v(f.coeffs().rbegin(), f.coeffs().rend());
    return IntPolynomial(std::move(v));
}

IntPolynomial salem_boyd(const IntPolynomial& R, std::size_t n, int sign) {
    if (R.is_zero() || R.leading() != 1) throw DomainError("salem_boyd requires a monic polynomial");
    if (sign != 1 && sign != -1) throw DomainError("salem_boyd sign must be +1 or -1");
    IntPolynomial s = reciprocal(R);
    return sign > 0 ? R.shifted(n) + s : R.shifted(n) - s;
}

namespace {

// Positive multiple of the remainder of a modulo b.
IntPolynomial positive_pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    const int db = b.degree();
    const mpz_class& lc = b.leading();
    const mpz_class mag = abs(lc);
    const int s = sgn(lc);
    while (!a.is_zero() && a.degree() >= db) {
        const std::size_t shift = static_cast<std::size_t>(a.degree() - db);
        mpz_class k = a.leading() * s;
        std::vector<mpz_class> v = a.coeffs();
        for (auto& c : v) c *= mag;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[j + shift] -= k * b.coeffs()[j];
        a = IntPolynomial(std::move(v));
        if (!a.is_zero()) {
            mpz_class g = a.content();
            if (g > 1) {
                std::vector<mpz_class> w = a.coeffs();
                for (auto& c : w) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
                a = IntPolynomial(std::move(w));
            }
        }
    }
    return a;
}

IntPolynomial strip_zero_roots(const IntPolynomial& f) {
    std::size_t k = 0;
    while (k < f.coeffs().size() && f.coeffs()[k] == 0) ++k;
    return IntPolynomial(std::vector<mpz_class>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end()));
}

int sign_variations(const std::vector<IntPolynomial>& seq, const mpq_class& t) {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = p.sign_at(t);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::size_t count_with(const std::vector<IntPolynomial>& seq, const mpq_class& lo, const mpq_class& hi) {
    return static_cast<std::size_t>(sign_variations(seq, lo) - sign_variations(seq, hi));
}

int multiplicity_in(const IntPolynomial& f, const RootBracket& b) {
    int mult = 1;
    IntPolynomial h = gcd(f, f.derivative());
    while (h.degree() >= 1) {
        if (count_real_roots_in(h, b.lo, b.hi) == 0) break;
        ++mult;
        h = gcd(h, h.derivative());
    }
    return mult;
}

}  // namespace

IntPolynomial divexact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
    std::vector<mpz_class> r = a.coeffs();
    std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const mpz_class& lc = b.leading();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
        const mpz_class& top = r[k + db];
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) throw DomainError("inexact polynomial division");
        mpz_class c = top / lc;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b.coeffs()[j];
        q[k] = c;
    }
    for (const auto& c : r)
        if (c != 0) throw DomainError("inexact polynomial division");
    return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial x = a.primitive_part();
    IntPolynomial y = b.primitive_part();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = positive_pseudo_rem(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    return x.primitive_part();
}

IntPolynomial square_free_part(const IntPolynomial& f) {
    if (f.degree() < 1) return f;
    IntPolynomial g = gcd(f, f.derivative());
    if (g.degree() < 1) return f.primitive_part();
    return divexact(f, g).primitive_part();
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& f) {
    std::vector<IntPolynomial> seq;
    if (f.is_zero()) return seq;
    seq.push_back(f);
    IntPolynomial d = f.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        IntPolynomial r = positive_pseudo_rem(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

const mpq_class& default_tolerance() {
    static const mpq_class tol("1/1000000000000");
    return tol;
}

mpq_class cauchy_bound(const IntPolynomial& f) {
    if (f.degree() < 1) return 1;
    mpq_class best = 0;
    const mpz_class lc = abs(f.leading());
    for (int i = 0; i < f.degree(); ++i) {
        mpq_class r(abs(f.coeffs()[static_cast<std::size_t>(i)]), lc);
        r.canonicalize();
        if (r > best) best = r;
    }
    return best + 1;
}

std::size_t count_real_roots_in(const IntPolynomial& f, const mpq_class& lo, const mpq_class& hi) {
    if (f.is_zero()) throw DomainError("root count of the zero polynomial");
    if (!(lo < hi)) throw DomainError("root count needs lo < hi");
    if (f.sign_at(lo) == 0 || f.sign_at(hi) == 0)
        throw DomainError("interval endpoint is a root; perturb the endpoint and retry");
    return count_with(sturm_sequence(square_free_part(f)), lo, hi);
}

std::vector<RootBracket> isolate_real_roots(const IntPolynomial& f) {
    std::vector<RootBracket> out;
    if (f.degree() < 1) return out;
    const IntPolynomial g = square_free_part(f);
    const auto seq = sturm_sequence(g);
    const mpq_class bound = cauchy_bound(g);

    struct Span {
        mpq_class lo, hi;
        std::size_t count;
    };
    std::vector<Span> work{{-bound, bound, count_with(seq, -bound, bound)}};
    while (!work.empty()) {
        Span s = std::move(work.back());
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back({s.lo, s.hi, 1});
            continue;
        }
        mpq_class mid = (s.lo + s.hi) / 2;
        if (g.sign_at(mid) == 0) {
            mpq_class delta = (s.hi - s.lo) / 4;
            while (g.sign_at(mid - delta) == 0 || g.sign_at(mid + delta) == 0 ||
                   count_with(seq, mid - delta, mid + delta) != 1)
                delta /= 2;
            out.push_back({mid - delta, mid + delta, 1});
            work.push_back({s.lo, mid - delta, count_with(seq, s.lo, mid - delta)});
            work.push_back({mid + delta, s.hi, count_with(seq, mid + delta, s.hi)});
        } else {
            work.push_back({s.lo, mid, count_with(seq, s.lo, mid)});
            work.push_back({mid, s.hi, count_with(seq, mid, s.hi)});
        }
    }
    std::sort(out.begin(), out.end(), [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });
    if (g.degree() != f.degree())
        for (auto& b : out) b.multiplicity = multiplicity_in(f, b);
    return out;
}

void refine(const IntPolynomial& square_free, RootBracket& b, const mpq_class& width) {
    int slo = square_free.sign_at(b.lo);
    while (b.width() > width) {
        mpq_class mid = b.midpoint();
        int s = square_free.sign_at(mid);
        if (s == 0) {
            mpq_class d = width / 4;
            b.lo = mid - d;
            b.hi = mid + d;
            return;
        }
        if (s == slo)
            b.lo = mid;
        else
            b.hi = mid;
    }
}

RootBracket largest_real_root_bracket(const IntPolynomial& f) {
    const IntPolynomial h = strip_zero_roots(f);
    auto roots = isolate_real_roots(h);
    if (roots.empty()) throw DomainError("polynomial has no positive real root");
    RootBracket top = roots.back();
    if (top.hi <= 0) throw DomainError("polynomial has no positive real root");
    if (top.lo < 0) {
        const IntPolynomial g = square_free_part(h);
        if (g.sign_at(0) == g.sign_at(top.hi)) throw DomainError("polynomial has no positive real root");
        top.lo = 0;
    }
    if (f.degree() != h.degree() || top.multiplicity != 1) top.multiplicity = multiplicity_in(f, top);
    return top;
}

mpq_class largest_real_root(const IntPolynomial& f, const mpq_class& tol) {
    if (tol <= 0) throw DomainError("tolerance must be positive");
    RootBracket b = largest_real_root_bracket(f);
    refine(square_free_part(strip_zero_roots(f)), b, tol * 2);
    return b.midpoint();
}

double largest_real_root_d(const IntPolynomial& f, const mpq_class& tol) { return largest_real_root(f, tol).get_d(); }

std::strong_ordering compare_largest_roots(const IntPolynomial& f, const IntPolynomial& g) {
    const IntPolynomial sf = square_free_part(strip_zero_roots(f));
    const IntPolynomial sg = square_free_part(strip_zero_roots(g));
    RootBracket bf = largest_real_root_bracket(f);
    RootBracket bg = largest_real_root_bracket(g);
    bool checked_common = false;
    while (true) {
        if (bf.hi <= bg.lo) return std::strong_ordering::less;
        if (bg.hi <= bf.lo) return std::strong_ordering::greater;
        if (!checked_common) {
            checked_common = true;
            IntPolynomial h = gcd(sf, sg);
            if (h.degree() >= 1) {
                mpq_class lo = std::max(bf.lo, bg.lo);
                mpq_class hi = std::min(bf.hi, bg.hi);
                if (count_real_roots_in(h, lo, hi) > 0) return std::strong_ordering::equal;
            }
        }
        refine(sf, bf, bf.width() / 2);
        refine(sg, bg, bg.width() / 2);
    }
}

}  // namespace mfib::poly
