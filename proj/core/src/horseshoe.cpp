#include "magicfib/horseshoe.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "magicfib/contfrac.hpp"
#include "magicfib/errors.hpp"
#include "magicfib/garside.hpp"
#include "magicfib/lamination.hpp"
#include "magicfib/magic.hpp"

namespace mfib::horseshoe {

std::size_t least_period(const std::string& word) {
    const std::size_t k = word.size();
    for (std::size_t d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < k && ok; ++i) ok = word[i] == word[i - d];
        if (ok) return d;
    }
    return k;
}

std::string canonical_rotation(const std::string& word) {
    std::string best = word;
    for (std::size_t r = 1; r < word.size(); ++r) best = std::min(best, word.substr(r) + word.substr(0, r));
    return best;
}

Code::Code(const std::string& word) {
    if (word.empty()) throw DomainError("empty orbit code");
    if (word.find_first_not_of("01") != std::string::npos) throw DomainError("orbit codes are binary: '" + word + "'");
    if (least_period(word) != word.size()) throw DomainError("code '" + word + "' is a repeated word");
    word_ = canonical_rotation(word);
}

std::vector<Code> periodic_codes(int k) {
    if (k < 1) throw DomainError("period must be >= 1");
    if (k > 24) throw DomainError("period too large to enumerate");
    std::vector<Code> out;
    const unsigned long total = 1UL << k;
    for (unsigned long bits = 0; bits < total; ++bits) {
        std::string w(static_cast<std::size_t>(k), '0');
        for (int i = 0; i < k; ++i)
            if (bits >> (k - 1 - i) & 1UL) w[static_cast<std::size_t>(i)] = '1';
        if (least_period(w) != w.size() || canonical_rotation(w) != w) continue;
        out.emplace_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int itinerary_order(const OrbitPoint& p, const OrbitPoint& q) {
    const std::size_t a = p.code->period();
    const std::size_t b = q.code->period();
    const std::size_t span = std::lcm(a, b);
    int ones = 0;
    for (std::size_t i = 0; i < span; ++i) {
        const char s = p.code->symbol(p.rotation, i);
        const char t = q.code->symbol(q.rotation, i);
        if (s != t) {
            const int base = s < t ? -1 : 1;
            return ones % 2 == 0 ? base : -base;
        }
        if (s == '1') ++ones;
    }
    throw DomainError("equal itineraries have no order");
}

namespace {

std::vector<OrbitPoint> sorted_points(const OrbitSet& q) {
    std::vector<OrbitPoint> pts;
    for (const auto& c : q)
        for (std::size_t r = 0; r < c.period(); ++r) pts.push_back({&c, r});
    std::sort(pts.begin(), pts.end(), [](const OrbitPoint& x, const OrbitPoint& y) { return itinerary_order(x, y) < 0; });
    return pts;
}

}  // namespace

braid::Permutation orbit_permutation(const OrbitSet& q) {
    const auto pts = sorted_points(q);
    auto index_of = [&](const Code* c, std::size_t r) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (pts[i].code == c && pts[i].rotation == r) return static_cast<int>(i);
        throw DomainError("orbit point not found");
    };
    braid::Permutation perm{std::vector<int>(pts.size())};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& pt = pts[i];
        perm.image[i] = index_of(pt.code, (pt.rotation + 1) % pt.code->period());
    }
    return perm;
}

braid::BraidWord braid_from_orbits(const OrbitSet& q) {
    std::set<Code> distinct(q.begin(), q.end());
    if (distinct.size() != q.size()) throw DomainError("orbit set repeats a code");
    std::size_t total = 0;
    for (const auto& c : q) total += c.period();
    if (total < 2) throw DomainError("an orbit set needs at least two points");
    return braid::permutation_braid(orbit_permutation(q));
}

bool is_template_embeddable_distinct(const std::vector<std::string>& strand_codes) {
    std::set<std::string> seen;
    for (const auto& w : strand_codes) {
        std::string key = canonical_rotation(w.substr(0, least_period(w)));
        if (!seen.insert(key).second) return false;
    }
    return true;
}

OrbitSet parse_orbit_set(const std::string& text) {
    OrbitSet q;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
                   item.end());
        if (!item.empty()) q.emplace_back(item);
    }
    if (q.empty()) throw DomainError("empty orbit set");
    return q;
}

std::string format_orbit_set(const OrbitSet& q) {
    std::string out;
    for (const auto& c : q) out += (out.empty() ? "" : ",") + c.word();
    return out;
}

namespace {

struct Target {
    braid::BraidWord tmp;
    long exponent = 0;
    std::vector<int> cycle_type;
    double lambda = 0.0;
};

Target make_target(int m, int p) {
    const auto cls = cf::class_of_monodromy(m, p);  // rejects reducible families
    Target t;
    t.tmp = braid::tmp(m, p);
    t.exponent = t.tmp.exponent_sum();
    t.cycle_type = braid::permutation(t.tmp).cycle_type();
    t.lambda = magic::dilatation({cls.x, cls.y, 0}).get_d();
    return t;
}

std::optional<int> twist_power_for(const braid::BraidWord& b, const Target& t, int m) {
    const long step = static_cast<long>(m) * (m - 1);
    const long diff = b.exponent_sum() - t.exponent;
    if (diff % step != 0) return std::nullopt;
    return static_cast<int>(diff / step);
}

braid::BraidWord twisted(const Target& t, int m, int k) { return t.tmp * braid::full_twist(m).power(k); }

}  // namespace

Certificate horseshoe_certificate(int m, int p, const CertificateOptions& opts) {
    if (m < 3) throw DomainError("T_{m,p} needs m >= 3");
    const Target target = make_target(m, p);

    std::vector<Code> pool;
    for (int k = 1; k <= m; ++k) {
        auto codes = periodic_codes(k);
        pool.insert(pool.end(), codes.begin(), codes.end());
    }
    std::sort(pool.begin(), pool.end(), [](const Code& a, const Code& b) { return a.word() < b.word(); });

    Certificate cert;
    std::vector<std::size_t> chosen;
    bool stop = false;
    std::size_t undecided = 0;

    auto examine = [&]() {
        ++cert.examined;
        OrbitSet q;
        for (auto i : chosen) q.push_back(pool[i]);
        braid::BraidWord b = braid_from_orbits(q);
        if (braid::permutation(b).cycle_type() != target.cycle_type) return;
        auto k = twist_power_for(b, target, m);
        if (!k) return;
        lam::DilatationEstimate est = lam::estimate_dilatation(b);
        if (!est.converged || std::abs(est.lambda - target.lambda) > opts.lambda_tol) return;
        ++cert.conjugacy_checks;
        try {
            if (!braid::are_conjugate(b, twisted(target, m, *k), opts.sss_limit)) return;
        } catch (const LimitExceeded&) {
            ++undecided;
            return;
        }
        cert.found = true;
        cert.orbits = q;
        cert.braid = b;
        cert.twist_power = *k;
        cert.lambda = est.lambda;
        stop = true;
    };

    // Orbit sets with the given number of orbits and total period, in lexicographic order.
    auto search = [&](auto&& self, std::size_t from, std::size_t orbits_left, int points_left) -> void {
        if (stop) return;
        if (orbits_left == 0) {
            if (points_left != 0) return;
            if (cert.examined >= opts.budget) {
                stop = true;
                cert.note = "budget exhausted";
                return;
            }
            examine();
            return;
        }
        for (std::size_t i = from; i < pool.size() && !stop; ++i) {
            const int len = static_cast<int>(pool[i].period());
            if (len > points_left) continue;
            chosen.push_back(i);
            self(self, i + 1, orbits_left - 1, points_left - len);
            chosen.pop_back();
        }
    };

    for (std::size_t r = 1; r <= static_cast<std::size_t>(m) && !stop; ++r) search(search, 0, r, m);
    if (!cert.found && undecided > 0)
        cert.note += (cert.note.empty() ? "" : "; ") + std::to_string(undecided) +
                     " candidates exceeded the conjugacy search limit";
    if (!cert.found && cert.note.empty()) cert.note = "no certificate among all orbit sets";
    return cert;
}

bool verify_certificate(int m, int p, const Certificate& c, const CertificateOptions& opts) {
    if (!c.found) return false;
    const Target target = make_target(m, p);
    const braid::BraidWord b = braid_from_orbits(c.orbits);
    if (!(b == c.braid) || b.strands() != m) return false;
    auto k = twist_power_for(b, target, m);
    if (!k || *k != c.twist_power) return false;
    lam::DilatationEstimate est = lam::estimate_dilatation(b);
    if (!est.converged || std::abs(est.lambda - target.lambda) > opts.lambda_tol) return false;
    return braid::are_conjugate(b, twisted(target, m, *k), opts.sss_limit);
}

}  // namespace mfib::horseshoe
