#include "magicfib/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

#include "magicfib/errors.hpp"

namespace mfib::lam {

namespace {

mpz_class pos(const mpz_class& v) { return v > 0 ? v : mpz_class(0); }
mpz_class neg(const mpz_class& v) { return v < 0 ? v : mpz_class(0); }

struct Pair {
    mpz_class x, y;
};

// Action of sigma_i^{+1 or -1} on two consecutive pairs.
void act(Pair& left, Pair& right, bool positive) {
    const mpz_class x1 = left.x, y1 = left.y, x2 = right.x, y2 = right.y;
    if (positive) {
        const mpz_class z = x1 - neg(y1) - x2 + pos(y2);
        left.x = x1 + pos(y1) + pos(pos(y2) - z);
        left.y = y2 - pos(z);
        right.x = x2 + neg(y2) + neg(neg(y1) + z);
        right.y = y1 + pos(z);
    } else {
        const mpz_class z = x1 + neg(y1) - x2 - pos(y2);
        left.x = x1 - pos(y1) - pos(pos(y2) + z);
        left.y = y2 + neg(z);
        right.x = x2 - neg(y2) - neg(neg(y1) - z);
        right.y = y1 - neg(z);
    }
}

// Pads the reduced coordinates with the two boundary pairs determined by them.
std::vector<Pair> lift(const DynnikovCoords& c) {
    const auto& a = c.a();
    const auto& b = c.b();
    mpz_class running = 0;
    mpz_class top;
    for (std::size_t k = 0; k < a.size(); ++k) {
        mpz_class v = abs(a[k]) + pos(b[k]) + running;
        if (k == 0 || v > top) top = v;
        running += b[k];
    }
    std::vector<Pair> big;
    big.reserve(a.size() + 2);
    big.push_back({0, -top});
    for (std::size_t k = 0; k < a.size(); ++k) big.push_back({a[k], b[k]});
    big.push_back({0, top - running});
    return big;
}

}  // namespace

DynnikovCoords::DynnikovCoords(int punctures, std::vector<mpz_class> a, std::vector<mpz_class> b)
    : n_(punctures), a_(std::move(a)), b_(std::move(b)) {
    if (n_ < 3) throw DomainError("Dynnikov coordinates need at least 3 punctures");
    const auto len = static_cast<std::size_t>(n_ - 2);
    if (a_.size() != len || b_.size() != len) throw DomainError("Dynnikov coordinates need 2n-4 entries");
    if (is_zero()) throw DomainError("the zero vector encodes no lamination");
}

DynnikovCoords DynnikovCoords::round_curves(int punctures) {
    const auto len = static_cast<std::size_t>(std::max(punctures - 2, 0));
    return DynnikovCoords(punctures, std::vector<mpz_class>(len, 0), std::vector<mpz_class>(len, -1));
}

bool DynnikovCoords::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    for (const auto& v : b_)
        if (v != 0) return false;
    return true;
}

mpz_class DynnikovCoords::l1_norm() const {
    mpz_class s = 0;
    for (const auto& v : a_) s += abs(v);
    for (const auto& v : b_) s += abs(v);
    return s;
}

double DynnikovCoords::log_norm() const {
    const mpz_class s = l1_norm();
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, s.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::string DynnikovCoords::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < a_.size(); ++i) out += (i ? ", " : "") + a_[i].get_str();
    out += "; ";
    for (std::size_t i = 0; i < b_.size(); ++i) out += (i ? ", " : "") + b_[i].get_str();
    return out + ")";
}

DynnikovCoords apply_generator(const DynnikovCoords& c, int g) {
    const int n = c.punctures();
    if (g == 0 || std::abs(g) > n - 1) throw DomainError("generator out of range for the puncture count");
    auto big = lift(c);
    const auto i = static_cast<std::size_t>(std::abs(g) - 1);
    act(big[i], big[i + 1], g > 0);
    std::vector<mpz_class> a, b;
    a.reserve(big.size() - 2);
    b.reserve(big.size() - 2);
    for (std::size_t k = 1; k + 1 < big.size(); ++k) {
        a.push_back(std::move(big[k].x));
        b.push_back(std::move(big[k].y));
    }
    return DynnikovCoords(n, std::move(a), std::move(b));
}

DynnikovCoords apply_word(const DynnikovCoords& c, const braid::BraidWord& w) {
    if (w.strands() != c.punctures()) throw DomainError("braid and lamination have different puncture counts");
    DynnikovCoords out = c;
    for (int g : w.letters()) out = apply_generator(out, g);
    return out;
}

namespace {

DilatationEstimate run_from(const braid::BraidWord& b, DynnikovCoords c, const EstimateOptions& opts) {
    DilatationEstimate est;
    std::vector<double> logs{c.log_norm()};
    for (int k = 1; k <= opts.max_iters; ++k) {
        c = apply_word(c, b);
        logs.push_back(c.log_norm());
        est.iterations = k;
        if (k < opts.window) continue;
        double lo = HUGE_VAL, hi = -HUGE_VAL;
        for (int j = k - opts.window + 1; j <= k; ++j) {
            double r = std::exp(logs[static_cast<std::size_t>(j)] - logs[static_cast<std::size_t>(j - 1)]);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        est.spread = hi - lo;
        if (est.spread <= opts.tol) {
            const auto ks = static_cast<std::size_t>(k);
            const auto k0 = static_cast<std::size_t>(k - opts.window);
            est.lambda = std::exp((logs[ks] - logs[k0]) / opts.window);
            if (est.lambda < 1.0 + 1e3 * opts.tol + 1e-9) {
                est.note = "growth ratio tends to 1 (periodic or reducible)";
                return est;
            }
            est.converged = true;
            return est;
        }
    }
    est.note = "iteration budget exhausted before the ratio stabilized";
    return est;
}

}  // namespace

DilatationEstimate estimate_dilatation(const braid::BraidWord& b, const EstimateOptions& opts) {
    if (b.strands() < 3) throw DomainError("the lamination oracle needs at least 3 strands");
    if (opts.window < 2 || opts.max_iters < opts.window) throw DomainError("bad estimator window");
    DilatationEstimate est = run_from(b, DynnikovCoords::round_curves(b.strands()), opts);
    est.seeds_tried = 1;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> coord(-10, 10);
    const auto len = static_cast<std::size_t>(b.strands() - 2);
    for (int attempt = 0; attempt < opts.retries && !est.converged && est.note.rfind("growth ratio", 0) != 0;
         ++attempt) {
        std::vector<mpz_class> a(len), bb(len);
        bool any = false;
        while (!any) {
            for (auto& v : a) v = coord(rng);
            for (auto& v : bb) v = coord(rng);
            for (std::size_t i = 0; i < len; ++i) any = any || a[i] != 0 || bb[i] != 0;
        }
        const int tried = est.seeds_tried;
        est = run_from(b, DynnikovCoords(b.strands(), std::move(a), std::move(bb)), opts);
        est.seeds_tried = tried + 1;
    }
    return est;
}

}  // namespace mfib::lam
