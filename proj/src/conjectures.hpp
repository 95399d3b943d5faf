// Exhaustive desk-scale checks of the two decomposition conjectures, backed
// by a brute-force oracle that never touches the Eisenstein factorization.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "transform.hpp"

namespace gcf {

// True iff t = t1 * t2 with both norms >= 2 (any chirality, any associate).
// Scans the divisors of norm(t) and their norm-form candidates, testing each
// with exact division only.
bool oracle_decomposable(const GcTransform& t);

struct ConjectureCounterexample {
    GcTransform transform;
    std::string detail;
};

struct ConjectureReport {
    u128 bound = 0;
    std::uint64_t checked = 0;  // transforms examined
    std::vector<ConjectureCounterexample> counterexamples;
    bool holds() const { return counterexamples.empty(); }
};

// Scan grids, exposed so coverage tests can compare bounds directly.
// Conjecture 1 examines one representative per chiral pair: l >= 1 with
// k > l, plus the self-chiral (1, 1). Conjecture 2 examines every
// content-free transform (gcd(k, l) == 1, l >= 1), both chiralities.
std::vector<GcTransform> conjecture1_grid(u128 bound);
std::vector<GcTransform> conjecture2_grid(u128 bound);

// Every transform that is primary by the oracle must have prime norm.
ConjectureReport check_conjecture1(u128 bound);  // bound >= 3

// Every content-free transform must decompose into exactly one prime-norm
// factor per prime factor of its norm, counted with multiplicity.
ConjectureReport check_conjecture2(u128 bound);  // bound >= 3

}  // namespace gcf
