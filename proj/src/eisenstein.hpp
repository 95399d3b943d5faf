// Exact arithmetic on Eisenstein integers a + b*w, where w = exp(i*pi/3),
// so w^2 = w - 1 and w^3 = -1. These are the natural coordinates of the
// triangular lattice underlying unfolded fullerene patches.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "int128.hpp"

namespace gcf {

struct Eisenstein {
    i128 a = 0;  // coefficient of 1
    i128 b = 0;  // coefficient of w
    friend bool operator==(const Eisenstein&, const Eisenstein&) = default;
};

inline bool is_zero(Eisenstein z) { return z.a == 0 && z.b == 0; }

Eisenstein add(Eisenstein x, Eisenstein y);
Eisenstein sub(Eisenstein x, Eisenstein y);
Eisenstein negate(Eisenstein z);
// (a + bw)(c + dw) = (ac - bd) + (bc + ad + bd)w
Eisenstein mul(Eisenstein x, Eisenstein y);
// conj(a + bw) = (a + b) - bw
Eisenstein conj(Eisenstein z);
// a^2 + ab + b^2 = z * conj(z); multiplicative and nonnegative
u128 norm(Eisenstein z);
// z * w = (-b, a + b): one 60-degree rotation
Eisenstein rotate60(Eisenstein z);
// w^m for m in 0..5; the six units of the lattice (w^3 = -1)
Eisenstein unit_value(int m);
std::optional<int> as_unit_power(Eisenstein z);

// The unique associate z * w^m with a > 0 and b >= 0 (first sextant);
// nonnegative pairs in this form are Coxeter coordinates.
struct Canonical {
    Eisenstein value;
    int unit_power = 0;  // the m used
};
Canonical canonical_sextant(Eisenstein z);  // domain error on zero

// Quotient q with q * d == x when x lies in the sublattice d * Z[w].
// Computed as x * conj(d) / norm(d), exact in both components or nothing.
std::optional<Eisenstein> exact_div(Eisenstein x, Eisenstein d);  // domain error on zero d

struct PrimePower {
    Eisenstein prime;  // canonical sextant form
    int exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    int unit_power = 0;               // residual unit w^m
    std::vector<PrimePower> factors;  // sorted by (norm, a, b)
    Eisenstein reconstruct() const;   // unit * product of prime powers, exact
};

// Exact factorization over Z[w]. The rational prime 3 splits off copies of
// (1, 1); p = 1 (mod 3) splits into a chiral prime pair found by norm-form
// search; p = 2 (mod 3) stays embedded as (p, 0) with norm p^2.
Factorization factorize(Eisenstein z);  // domain error on zero

// All (k, l) with k >= 1, l >= 0 and k^2 + kl + l^2 == n, ascending in k.
std::vector<Eisenstein> norm_form_solutions(u128 n);

// First norm-form solution for p = 3 or a prime p = 1 (mod 3).
Eisenstein prime_above(u128 p);

std::string to_string(Eisenstein z);  // "(a, b)"

// Rational-integer utilities used by the factorization and candidate search.
bool is_prime(u128 n);
std::vector<std::pair<u128, int>> factor_integer(u128 n);  // ascending primes

}  // namespace gcf
