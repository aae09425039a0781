#include "magicfib/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "magicfib/errors.hpp"

namespace mfib::braid {

BraidWord::BraidWord(int strands, std::vector<int> letters) : n_(strands), letters_(std::move(letters)) {
    if (n_ < 1) throw DomainError("a braid needs at least one strand");
    for (int g : letters_)
        if (g == 0 || std::abs(g) > n_ - 1)
            throw DomainError("generator " + std::to_string(g) + " is not in B" + std::to_string(n_));
}

long BraidWord::exponent_sum() const {
    long s = 0;
    for (int g : letters_) s += g > 0 ? 1 : -1;
    return s;
}

BraidWord BraidWord::inverse() const {
    std::vector<int> v(letters_.rbegin(), letters_.rend());
    for (int& g : v) g = -g;
    return BraidWord(n_, std::move(v));
}

BraidWord BraidWord::free_reduced() const {
    std::vector<int> out;
    for (int g : letters_) {
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    }
    return BraidWord(n_, std::move(out));
}

BraidWord BraidWord::power(int k) const {
    const BraidWord base = k < 0 ? inverse() : *this;
    std::vector<int> v;
    v.reserve(base.letters_.size() * static_cast<std::size_t>(std::abs(k)));
    for (int i = 0; i < std::abs(k); ++i) v.insert(v.end(), base.letters_.begin(), base.letters_.end());
    return BraidWord(n_, std::move(v));
}

BraidWord BraidWord::widened(int strands) const {
    if (strands < n_) throw DomainError("cannot narrow a braid");
    return BraidWord(strands, letters_);
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.n_ != b.n_) throw DomainError("braids on different strand counts");
    std::vector<int> v = a.letters_;
    v.insert(v.end(), b.letters_.begin(), b.letters_.end());
    return BraidWord(a.n_, std::move(v));
}

std::string BraidWord::to_string() const {
    std::string out = "B" + std::to_string(n_) + ":";
    for (int g : letters_) out += " " + std::to_string(g);
    return out;
}

BraidWord BraidWord::parse(const std::string& text) {
    std::string body = text;
    int n = -1;
    auto first = body.find_first_not_of(" \t");
    if (first != std::string::npos && (body[first] == 'B' || body[first] == 'b')) {
        auto colon = body.find(':', first);
        if (colon == std::string::npos) throw DomainError("braid prefix must look like 'B6:'");
        try {
            n = std::stoi(body.substr(first + 1, colon - first - 1));
        } catch (const std::exception&) {
            throw DomainError("bad strand count in '" + text + "'");
        }
        body = body.substr(colon + 1);
    }
    std::vector<int> letters;
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            letters.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw DomainError("bad braid letter '" + tok + "'");
        }
    }
    if (n < 0) {
        n = 2;
        for (int g : letters) n = std::max(n, std::abs(g) + 1);
    }
    return BraidWord(n, std::move(letters));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> out;
    std::vector<bool> seen(image.size(), false);
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j])) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

Permutation permutation(const BraidWord& b) {
    const auto n = static_cast<std::size_t>(b.strands());
    std::vector<int> at(n);  // strand currently at each position
    for (std::size_t i = 0; i < n; ++i) at[i] = static_cast<int>(i);
    for (int g : b.letters()) {
        auto i = static_cast<std::size_t>(std::abs(g) - 1);
        std::swap(at[i], at[i + 1]);
    }
    Permutation p{std::vector<int>(n)};
    for (std::size_t k = 0; k < n; ++k) p.image[static_cast<std::size_t>(at[k])] = static_cast<int>(k);
    return p;
}

BraidWord permutation_braid(const Permutation& perm) {
    std::vector<int> target = perm.image;
    std::vector<int> letters;
    for (bool swapped = true; swapped;) {
        swapped = false;
        for (std::size_t k = 0; k + 1 < target.size(); ++k) {
            if (target[k] > target[k + 1]) {
                std::swap(target[k], target[k + 1]);
                letters.push_back(static_cast<int>(k) + 1);
                swapped = true;
            }
        }
    }
    return BraidWord(std::max<int>(1, static_cast<int>(perm.image.size())), std::move(letters));
}

BraidWord tmp(int m, int p) {
    if (m < 3) throw DomainError("T_{m,p} needs m >= 3");
    if (p < 1) throw DomainError("T_{m,p} needs p >= 1");
    std::vector<int> block{1};
    for (int i = 1; i < m; ++i) block.push_back(i);
    std::vector<int> v;
    for (int k = 0; k < p; ++k) v.insert(v.end(), block.begin(), block.end());
    v.push_back(-(m - 1));
    v.push_back(-(m - 1));
    return BraidWord(m, std::move(v)).free_reduced();
}

BraidWord forget_strand(const BraidWord& b, int s) {
    if (s < 1 || s > b.strands()) throw DomainError("strand index out of range");
    if (b.strands() < 2) throw DomainError("cannot forget the only strand");
    int pos = s;
    std::vector<int> out;
    for (int g : b.letters()) {
        const int i = std::abs(g);
        if (i == pos) {
            pos = i + 1;
        } else if (i + 1 == pos) {
            pos = i;
        } else {
            const int j = i > pos ? i - 1 : i;
            out.push_back(g > 0 ? j : -j);
        }
    }
    return BraidWord(b.strands() - 1, std::move(out));
}

BraidWord half_twist(int n) {
    std::vector<int> v;
    for (int k = 1; k < n; ++k)
        for (int i = k; i >= 1; --i) v.push_back(i);
    return BraidWord(n, std::move(v));
}

BraidWord full_twist(int m) {
    if (m < 2) throw DomainError("full twist needs m >= 2");
    std::vector<int> row;
    for (int i = 1; i < m; ++i) row.push_back(i);
    return BraidWord(m, row).power(m);
}

BraidWord full_twist_alt(int m) {
    if (m < 2) throw DomainError("full twist needs m >= 2");
    std::vector<int> row{1};
    for (int i = 1; i < m; ++i) row.push_back(i);
    return BraidWord(m, row).power(m - 1);
}

BraidWord sigma_hk(int k) {
    if (k < 2) throw DomainError("sigma_(k) needs k >= 2");
    std::vector<int> v;
    for (int i = 1; i <= 2 * k - 2; ++i) v.push_back(i);
    for (int i = 1; i <= 2 * k - 4; ++i) v.push_back(i);
    return BraidWord(2 * k - 1, std::move(v));
}

BraidWord psi(int n) {
    if (n == 6) return BraidWord(6, {5, 4, 3, 2, 1, 5, 4, 3, 5, 4});
    int power = 0;
    if (n % 2 == 1 && n >= 5)
        power = 2;
    else if (n % 4 == 0 && n >= 8)
        power = n / 2 + 1;
    else if (n % 8 == 2 && n >= 10)
        power = 2 * ((n - 2) / 8) + 1;
    else if (n % 8 == 6 && n >= 14)
        power = 6 * ((n - 6) / 8) + 5;
    else
        throw DomainError("psi_n is not defined for n = " + std::to_string(n));
    std::vector<int> L;
    for (int i = n - 1; i >= 1; --i) L.push_back(i);
    BraidWord w = BraidWord(n, L).power(power);
    return w * BraidWord(n, {-1, -2});
}

BraidWord thm1_braid_b() {
    std::vector<int> v{1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 1, 2, 3};
    for (int& g : v) g = -g;
    return BraidWord(7, std::move(v));
}

BraidWord braid_a_prime() {
    BraidWord inner(7, {1, 2, 2, 3, 4});
    inner = inner * full_twist(5).inverse().widened(7);
    BraidWord tail(7, {-5, -4, -3, -2, -1, -1, -2, -3, -4, -5});
    return BraidWord(7, {-6}) * inner * tail;
}

BraidWord braid_b_prime() {
    std::vector<int> v{6, 1, 2, 3, 4, 1, 2, 3, 1, 2, 5, 5, 5, 5, 4, 3, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5};
    for (int& g : v) g = -g;
    return BraidWord(7, std::move(v));
}

}  // namespace mfib::braid
