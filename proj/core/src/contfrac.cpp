#include "magicfib/contfrac.hpp"

#include <numeric>
#include <string>

#include "magicfib/errors.hpp"

namespace mfib::cf {

namespace {

Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow in continued fraction arithmetic");
    return r;
}

Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow in continued fraction arithmetic");
    return r;
}

void require_coprime_pair(Int x, Int y) {
    if (x < 1 || y < 1) throw DomainError("continued fraction needs x, y >= 1");
    if (std::gcd(x, y) != 1)
        throw DomainError("gcd(" + std::to_string(x) + "," + std::to_string(y) + ") != 1");
}

// Product of (w, 1; 1, 0) matrices, kept as its four entries.
struct Convergents {
    Int a = 1, b = 0, c = 0, d = 1;

    void push(Int w) {
        Int na = add(mul(a, w), b);
        Int nc = add(mul(c, w), d);
        b = a;
        d = c;
        a = na;
        c = nc;
    }
};

}  // namespace

EuclidData euclid(Int a, Int b) {
    if (a < 1 || b < 1) throw DomainError("euclid needs positive arguments");
    EuclidData e;
    e.r = {a, b};
    while (b != 0) {
        e.q.push_back(a / b);
        Int r = a % b;
        a = b;
        b = r;
        e.r.push_back(r);
    }
    return e;
}

Int bracket(std::span<const Int> w) {
    if (w.empty()) throw DomainError("bracket of an empty sequence");
    Int before = 1;
    Int cur = w[0];
    for (std::size_t i = 1; i < w.size(); ++i) {
        Int next = add(mul(cur, w[i]), before);
        before = cur;
        cur = next;
    }
    return cur;
}

std::vector<Int> cf_with_parity(Int x, Int y) {
    require_coprime_pair(x, y);
    if (x == 1 && y == 1) return {1};
    auto w = euclid(std::max(x, y), std::min(x, y)).q;
    const bool want_odd = x > y;
    if ((w.size() % 2 == 1) != want_odd) {
        if (w.back() >= 2) {
            --w.back();
            w.push_back(1);
        } else {
            w.pop_back();
            ++w.back();
        }
    }
    return w;
}

Int p_of(Int x, Int y) {
    const auto w = cf_with_parity(x, y);
    // [w_{j-1}, ..., w_1, w_0 = 1]
    std::vector<Int> seq(w.rbegin() + 1, w.rend());
    seq.push_back(1);
    return bracket(seq);
}

Monodromy monodromy_of(Int x, Int y) {
    const Int m = add(add(x, y), 1);
    Int p = p_of(x, y) % (m - 1);
    if (p == 0) p = m - 1;
    return {m, p};
}

bool is_reducible_family(Int m, Int p) { return std::gcd(p, m - 1) != 1; }

PairClass class_of_monodromy(Int m, Int p) {
    if (m < 3) throw DomainError("T_{m,p} needs m >= 3");
    if (p < 1) throw DomainError("T_{m,p} needs p >= 1");
    if (is_reducible_family(m, p))
        throw DomainError("reducible family: gcd(" + std::to_string(p) + "," + std::to_string(m - 1) + ") != 1");
    Int target = p % (m - 1);
    if (target == 0) target = m - 1;
    for (Int x = 1; x < m - 1; ++x) {
        Int y = m - 1 - x;
        if (std::gcd(x, y) != 1) continue;
        if (monodromy_of(x, y).p == target) return {x, y};
    }
    throw DomainError("no class has monodromy T_{" + std::to_string(m) + "," + std::to_string(p) + "}");
}

MinimalMonodromy minimal_monodromy(Int m) {
    if (m < 3) throw DomainError("T_{m,p} needs m >= 3");
    MinimalMonodromy out{m, {}, {}};
    for (Int x = 1; x < m - 1; ++x) {
        const Int y = m - 1 - x;
        if (std::gcd(x, y) != 1) continue;
        if (!out.classes.empty()) {
            const auto& best = out.classes.front();
            auto order = magic::compare_dilatation({x, y, 0}, {best.x, best.y, 0});
            if (order > 0) continue;
            if (order < 0) out.classes.clear();
        }
        out.classes.push_back({x, y});
    }
    for (const auto& c : out.classes) out.ps.push_back(monodromy_of(c.x, c.y).p);
    return out;
}

FiberSequence fiber_from_sequence(std::span<const Int> q) {
    if (q.empty()) throw DomainError("fiber sequence must be nonempty");
    for (Int v : q)
        if (v < 1) throw DomainError("fiber sequence entries must be >= 1");

    Convergents conv;
    Int m = 0;
    Int p = 0;
    std::size_t at = 0;
    if (q.size() % 2 == 1) {
        m = add(q[0], 2);
        p = 1;
        conv.push(q[0]);
        at = 1;
    } else {
        const Int k = q[0];
        const Int l = q[1];
        m = add(mul(k + 1, l), 2);
        p = k + 1;
        conv.push(k);
        conv.push(l);
        at = 2;
    }
    for (; at < q.size(); at += 2) {
        const Int k = q[at];
        const Int l = q[at + 1];
        const Int next_p = add(mul(k, m - 1), p);
        m = add(mul(l, next_p), m);
        p = next_p;
        conv.push(k);
        conv.push(l);
    }
    p %= m - 1;
    if (p == 0) p = m - 1;

    // q read as a continued fraction gives max/min of the class.
    const Int num = conv.a;
    const Int den = conv.c;
    magic::FiberClass cls = q.size() % 2 == 1 ? magic::FiberClass{num, den, 0} : magic::FiberClass{den, num, 0};
    return {{m, p}, cls};
}

}  // namespace mfib::cf
