#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "magicfib/braid.hpp"

namespace mfib::horseshoe {

// Periodic orbit of the full 2-shift, stored as its least rotation.
class Code {
public:
    explicit Code(const std::string& word);  // any rotation; must be aperiodic

    const std::string& word() const noexcept { return word_; }
    std::size_t period() const noexcept { return word_.size(); }
    // Itinerary of the point starting at the given rotation.
    char symbol(std::size_t rotation, std::size_t index) const { return word_[(rotation + index) % word_.size()]; }

    friend auto operator<=>(const Code&, const Code&) = default;

private:
    std::string word_;
};

using OrbitSet = std::vector<Code>;

std::string canonical_rotation(const std::string& word);
std::size_t least_period(const std::string& word);

// Binary necklaces of least period exactly k, sorted.
std::vector<Code> periodic_codes(int k);

// Point on an orbit: the code and how far it is rotated.
struct OrbitPoint {
    const Code* code;
    std::size_t rotation;
};

// Kneading order of the infinite periodic itineraries; -1, 0 or 1.
int itinerary_order(const OrbitPoint& p, const OrbitPoint& q);

// Position permutation of the points under the shift, 0-based.
braid::Permutation orbit_permutation(const OrbitSet& q);

// Template braid: the positive permutation braid of orbit_permutation.
// Symbol-0 strands keep their order, symbol-1 strands reverse theirs and cross
// in front of the 0-block.
braid::BraidWord braid_from_orbits(const OrbitSet& q);

// True iff no two strands carry the same cyclic code.
bool is_template_embeddable_distinct(const std::vector<std::string>& strand_codes);

OrbitSet parse_orbit_set(const std::string& text);  // "0,01,011"
std::string format_orbit_set(const OrbitSet& q);

struct Certificate {
    bool found = false;
    OrbitSet orbits;
    braid::BraidWord braid;
    int twist_power = 0;  // b_Q is conjugate to T_{m,p} times this power of the full twist
    double lambda = 0.0;
    std::size_t examined = 0;
    std::size_t conjugacy_checks = 0;
    std::string note;
};

struct CertificateOptions {
    std::size_t budget = 200000;       // orbit sets examined
    std::size_t sss_limit = 200000;    // per conjugacy test
    double lambda_tol = 1e-4;
};

Certificate horseshoe_certificate(int m, int p, const CertificateOptions& opts = {});

// Re-checks a certificate from scratch.
bool verify_certificate(int m, int p, const Certificate& c, const CertificateOptions& opts = {});

}  // namespace mfib::horseshoe
