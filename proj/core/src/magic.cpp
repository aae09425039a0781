#include "magicfib/magic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "magicfib/errors.hpp"
#include "magicfib/laurent.hpp"

namespace mfib::magic {

namespace {

std::int64_t gcd0(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }  // gcd(0, w) = |w|

void require_cone(const FiberClass& c) {
    if (!in_open_cone(c)) throw DomainError("class " + c.to_string() + " is outside the open fibered cone");
}

void require_primitive(const FiberClass& c) {
    if (!c.primitive()) throw DomainError("class " + c.to_string() + " is not primitive");
}

}  // namespace

std::int64_t FiberClass::content() const { return std::gcd(std::gcd(x, y), z); }

FiberClass FiberClass::primitive_part() const {
    std::int64_t g = content();
    if (g == 0) throw DomainError("the zero class has no primitive part");
    return {x / g, y / g, z / g};
}

FiberClass FiberClass::canonical() const { return x >= y ? *this : FiberClass{y, x, z}; }

std::string FiberClass::to_string() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

FiberClass parse_class(const std::string& text) {
    std::vector<std::int64_t> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError("cannot parse class coordinate '" + item + "'");
        }
    }
    if (v.size() == 2) return {v[0], v[1], 0};
    if (v.size() == 3) return {v[0], v[1], v[2]};
    throw DomainError("a class is written x,y,z or x,y");
}

std::string Genus0Kind::to_string() const {
    switch (tag) {
        case Tag::AxisPair: return "AxisPair";
        case Tag::Chain: return "Chain(" + std::to_string(n) + ")";
        case Tag::Double: return "Double(" + std::to_string(n) + ")";
        case Tag::NotGenus0: break;
    }
    return "NotGenus0";
}

bool in_open_cone(const FiberClass& c) { return c.x > 0 && c.y > 0 && c.x > c.z && c.y > c.z; }

std::int64_t thurston_norm(const FiberClass& c) {
    require_cone(c);
    return c.x + c.y - c.z;
}

FiberInfo fiber_info(const FiberClass& c) {
    require_cone(c);
    require_primitive(c);
    FiberInfo info;
    info.norm = c.x + c.y - c.z;
    info.boundary = {gcd0(c.x, c.y + c.z), gcd0(c.y, c.z + c.x), gcd0(c.z, c.x + c.y)};
    info.punctures = info.boundary[0] + info.boundary[1] + info.boundary[2];
    info.genus = (info.norm + 2 - info.punctures) / 2;
    info.prongs = {c.x / info.boundary[0], c.y / info.boundary[1], (c.x + c.y - 2 * c.z) / info.boundary[2]};
    return info;
}

Genus0Kind genus0_classify(const FiberClass& raw) {
    require_cone(raw);
    require_primitive(raw);
    const FiberClass c = raw.canonical();
    using Tag = Genus0Kind::Tag;
    if (c.z == 0) return {std::gcd(c.x, c.y) == 1 ? Tag::AxisPair : Tag::NotGenus0, 0};
    const std::int64_t n = c.y;
    if (c.x == n + 1 && c.z == n - 1 && n >= 2 && n % 3 != 0) return {Tag::Chain, n};
    const std::int64_t k = c.z;
    if (k >= 1 && c.x == 2 * k + 1 && c.y == k + 1) return {Tag::Double, k};
    return {Tag::NotGenus0, 0};
}

std::vector<FiberClass> enumerate_Hn(int n) {
    if (n < 4) throw DomainError("H_n needs n >= 4");
    std::vector<FiberClass> out;
    // z = 0: punctures x + y + 2.
    for (std::int64_t y = 1; 2 * y <= n - 2; ++y) {
        std::int64_t x = n - 2 - y;
        if (std::gcd(x, y) == 1) out.push_back({x, y, 0});
    }
    // (k+1, k, k-1): punctures k + 4.
    if (std::int64_t k = n - 4; k >= 2 && k % 3 != 0) out.push_back({k + 1, k, k - 1});
    // (2k+1, k+1, k): punctures 2k + 4.
    if (n % 2 == 0) {
        if (std::int64_t k = (n - 4) / 2; k >= 1) out.push_back({2 * k + 1, k + 1, k});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

poly::IntPolynomial teichmuller_specialization(const FiberClass& c) {
    require_cone(c);
    return laurent::specialize(laurent::teichmuller_s(), {static_cast<long>(c.x), static_cast<long>(c.y),
                                                          static_cast<long>(c.z)});
}

mpq_class dilatation(const FiberClass& c, const mpq_class& tol) {
    require_cone(c);
    require_primitive(c);
    return poly::largest_real_root(teichmuller_specialization(c), tol);
}

double entropy(const FiberClass& c, const mpq_class& tol) {
    require_cone(c);
    const std::int64_t r = c.content();
    return std::log(dilatation(c.primitive_part(), tol).get_d()) / static_cast<double>(r);
}

double normalized_entropy(const FiberClass& c, const mpq_class& tol) {
    return static_cast<double>(thurston_norm(c)) * entropy(c, tol);
}

std::strong_ordering compare_dilatation(const FiberClass& a, const FiberClass& b) {
    require_cone(a);
    require_cone(b);
    require_primitive(a);
    require_primitive(b);
    return poly::compare_largest_roots(teichmuller_specialization(a), teichmuller_specialization(b));
}

MinClass min_dilatation_class(int n, const mpq_class& tol) {
    const auto classes = enumerate_Hn(n);
    if (classes.empty()) throw DomainError("H_" + std::to_string(n) + " is empty");
    FiberClass best = classes.front();
    std::vector<FiberClass> ties;
    for (std::size_t i = 1; i < classes.size(); ++i) {
        auto order = compare_dilatation(classes[i], best);
        if (order == std::strong_ordering::less) {
            best = classes[i];
            ties.clear();
        } else if (order == std::strong_ordering::equal) {
            ties.push_back(classes[i]);
        }
    }
    return {best, dilatation(best, tol), ties};
}

}  // namespace mfib::magic
