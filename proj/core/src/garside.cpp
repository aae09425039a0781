#include "magicfib/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

#include "magicfib/errors.hpp"

namespace mfib::braid {

namespace {

using u8 = std::uint8_t;

void require_strands(int n) {
    if (n < 1 || n > kMaxGarsideStrands)
        throw DomainError("Garside computations support 1.." + std::to_string(kMaxGarsideStrands) + " strands");
}

Simple inverse_perm(int n, const Simple& s) {
    Simple r;
    for (int i = 0; i < n; ++i) r.p[s.p[i]] = static_cast<u8>(i);
    return r;
}

Simple tau_power(int n, const Simple& s, int k) { return (k % 2 == 0) ? s : tau(n, s); }

// Moves generators from the head of b to the tail of a until S(b) is inside F(a).
bool left_weight(int n, Simple& a, Simple& b) {
    bool changed = false;
    while (true) {
        Simple inv = inverse_perm(n, a);
        int found = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (b.p[i] > b.p[i + 1] && !(inv.p[i] > inv.p[i + 1])) {
                found = i;
                break;
            }
        }
        if (found < 0) return changed;
        changed = true;
        const u8 lo = static_cast<u8>(found);
        const u8 hi = static_cast<u8>(found + 1);
        for (int j = 0; j < n; ++j) {
            if (a.p[j] == lo)
                a.p[j] = hi;
            else if (a.p[j] == hi)
                a.p[j] = lo;
        }
        std::swap(b.p[found], b.p[found + 1]);
    }
}

}  // namespace

Simple simple_identity(int n) {
    require_strands(n);
    Simple s;
    for (int i = 0; i < n; ++i) s.p[i] = static_cast<u8>(i);
    return s;
}

Simple simple_delta(int n) {
    require_strands(n);
    Simple s;
    for (int i = 0; i < n; ++i) s.p[i] = static_cast<u8>(n - 1 - i);
    return s;
}

Simple simple_generator(int n, int i) {
    if (i < 1 || i > n - 1) throw DomainError("generator out of range");
    Simple s = simple_identity(n);
    std::swap(s.p[i - 1], s.p[i]);
    return s;
}

Simple simple_from_permutation(const Permutation& perm) {
    const int n = static_cast<int>(perm.image.size());
    require_strands(n);
    Simple s;
    for (int i = 0; i < n; ++i) s.p[i] = static_cast<u8>(perm.image[static_cast<std::size_t>(i)]);
    return s;
}

Simple compose(int n, const Simple& a, const Simple& b) {
    Simple r;
    for (int i = 0; i < n; ++i) r.p[i] = b.p[a.p[i]];
    return r;
}

Simple tau(int n, const Simple& s) {
    Simple r;
    for (int i = 0; i < n; ++i) r.p[i] = static_cast<u8>(n - 1 - s.p[n - 1 - i]);
    return r;
}

Simple complement(int n, const Simple& s) {
    Simple inv = inverse_perm(n, s);
    Simple r;
    for (int j = 0; j < n; ++j) r.p[j] = static_cast<u8>(n - 1 - inv.p[j]);
    return r;
}

bool is_identity(int n, const Simple& s) {
    for (int i = 0; i < n; ++i)
        if (s.p[i] != i) return false;
    return true;
}

bool is_delta(int n, const Simple& s) {
    for (int i = 0; i < n; ++i)
        if (s.p[i] != n - 1 - i) return false;
    return true;
}

BraidWord simple_word(int n, const Simple& s) {
    Permutation perm{std::vector<int>(s.p.begin(), s.p.begin() + n)};
    return permutation_braid(perm).widened(n);
}

BraidWord CanonicalForm::to_word() const {
    BraidWord w = half_twist(n).power(inf);
    for (const auto& f : factors) w = w * simple_word(n, f);
    return w;
}

std::string CanonicalForm::to_string() const {
    std::string out = "D^" + std::to_string(inf);
    for (const auto& f : factors) {
        out += " [";
        bool first = true;
        const BraidWord w = simple_word(n, f);
        for (int g : w.letters()) {
            if (!first) out += " ";
            out += std::to_string(g);
            first = false;
        }
        out += "]";
    }
    return out;
}

std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.inf <=> b.inf; c != 0) return c;
    if (auto c = a.factors.size() <=> b.factors.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (auto c = a.factors[i] <=> b.factors[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

CanonicalForm normal_form_of(int n, int inf, const std::vector<Simple>& simples) {
    require_strands(n);
    std::vector<Simple> r;
    r.reserve(simples.size());
    for (const auto& s : simples) {
        r.push_back(s);
        for (std::size_t j = r.size() - 1; j-- > 0;)
            if (!left_weight(n, r[j], r[j + 1])) break;
    }
    std::size_t lead = 0;
    while (lead < r.size() && is_delta(n, r[lead])) ++lead;
    std::size_t end = r.size();
    while (end > lead && is_identity(n, r[end - 1])) --end;
    CanonicalForm cf{n, inf + static_cast<int>(lead), {}};
    cf.factors.assign(r.begin() + static_cast<std::ptrdiff_t>(lead), r.begin() + static_cast<std::ptrdiff_t>(end));
    return cf;
}

CanonicalForm normal_form(const BraidWord& b) {
    const int n = b.strands();
    require_strands(n);
    // sigma_i^-1 = Delta^-1 X with X = Delta sigma_i^-1; each Delta^-1 is pushed to
    // the front, flipping everything before it by tau. Flips are applied lazily.
    const Simple delta = simple_delta(n);
    std::vector<Simple> raw;
    std::vector<int> flips_at;
    int flips = 0;
    for (int g : b.letters()) {
        const int i = std::abs(g);
        if (g > 0) {
            raw.push_back(simple_generator(n, i));
        } else {
            ++flips;
            raw.push_back(compose(n, delta, simple_generator(n, i)));
        }
        flips_at.push_back(flips);
    }
    for (std::size_t k = 0; k < raw.size(); ++k) raw[k] = tau_power(n, raw[k], flips - flips_at[k]);
    return normal_form_of(n, -flips, raw);
}

CanonicalForm product(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.n != b.n) throw DomainError("braids on different strand counts");
    std::vector<Simple> s;
    for (const auto& f : a.factors) s.push_back(tau_power(a.n, f, b.inf));
    s.insert(s.end(), b.factors.begin(), b.factors.end());
    return normal_form_of(a.n, a.inf + b.inf, s);
}

CanonicalForm conjugate_by_simple(const CanonicalForm& x, const Simple& s) {
    // s^-1 x s = Delta^(inf-1) tau^(inf-1)(s^-1 Delta) A_1 ... A_r s
    const int n = x.n;
    std::vector<Simple> seq;
    seq.reserve(x.factors.size() + 2);
    seq.push_back(tau_power(n, complement(n, s), x.inf - 1));
    seq.insert(seq.end(), x.factors.begin(), x.factors.end());
    seq.push_back(s);
    return normal_form_of(n, x.inf - 1, seq);
}

CanonicalForm cycling(const CanonicalForm& x) {
    if (x.factors.empty()) return x;
    std::vector<Simple> seq(x.factors.begin() + 1, x.factors.end());
    seq.push_back(tau_power(x.n, x.factors.front(), x.inf));
    return normal_form_of(x.n, x.inf, seq);
}

CanonicalForm decycling(const CanonicalForm& x) {
    if (x.factors.empty()) return x;
    std::vector<Simple> seq;
    seq.push_back(tau_power(x.n, x.factors.back(), x.inf));
    seq.insert(seq.end(), x.factors.begin(), x.factors.end() - 1);
    return normal_form_of(x.n, x.inf, seq);
}

CanonicalForm super_summit_representative(const BraidWord& b) {
    CanonicalForm x = normal_form(b);
    const int n = b.strands();
    const int bound = n * (n - 1) / 2;

    for (bool improved = true; improved;) {
        improved = false;
        CanonicalForm y = x;
        for (int k = 0; k < bound && !y.factors.empty(); ++k) {
            y = cycling(y);
            if (y.inf > x.inf) {
                x = y;
                improved = true;
                break;
            }
        }
    }
    for (bool improved = true; improved;) {
        improved = false;
        CanonicalForm y = x;
        for (int k = 0; k < bound && !y.factors.empty(); ++k) {
            y = decycling(y);
            if (y.sup() < x.sup()) {
                x = y;
                improved = true;
                break;
            }
        }
    }
    return x;
}

namespace {

std::vector<Simple> all_simples(int n) {
    std::vector<u8> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), u8{0});
    std::vector<Simple> out;
    do {
        Simple s;
        std::copy(perm.begin(), perm.end(), s.p.begin());
        if (!is_identity(n, s)) out.push_back(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Breadth-first closure of rep under simple conjugations at fixed inf and sup.
// Stops early when target is reached.
std::set<CanonicalForm> closure(const CanonicalForm& rep, std::size_t limit, const CanonicalForm* target) {
    const int n = rep.n;
    if (n > 10) throw LimitExceeded("super summit closure over all simple elements is limited to 10 strands", 0);
    const auto simples = all_simples(n);
    std::set<CanonicalForm> seen{rep};
    std::deque<CanonicalForm> queue{rep};
    while (!queue.empty()) {
        CanonicalForm x = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : simples) {
            CanonicalForm y = conjugate_by_simple(x, s);
            if (y.inf != rep.inf || y.sup() != rep.sup()) continue;
            if (!seen.insert(y).second) continue;
            if (target && y == *target) return seen;
            if (seen.size() > limit)
                throw LimitExceeded("super summit set exceeds the limit of " + std::to_string(limit), seen.size());
            queue.push_back(std::move(y));
        }
    }
    return seen;
}

}  // namespace

std::vector<CanonicalForm> super_summit_set(const BraidWord& b, std::size_t limit) {
    const CanonicalForm rep = super_summit_representative(b);
    auto s = closure(rep, limit, nullptr);
    return {s.begin(), s.end()};
}

bool are_conjugate(const BraidWord& a, const BraidWord& b, std::size_t limit) {
    if (a.strands() != b.strands()) throw DomainError("conjugacy needs equal strand counts");
    if (a.exponent_sum() != b.exponent_sum()) return false;
    if (permutation(a).cycle_type() != permutation(b).cycle_type()) return false;
    const CanonicalForm ra = super_summit_representative(a);
    const CanonicalForm rb = super_summit_representative(b);
    if (ra.inf != rb.inf || ra.sup() != rb.sup()) return false;
    if (ra == rb) return true;
    auto s = closure(ra, limit, &rb);
    return s.count(rb) > 0;
}

}  // namespace mfib::braid
