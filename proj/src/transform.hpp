// Goldberg-Coxeter transformations: first-sextant Eisenstein integers acting
// on edge coordinates by multiplication. (k, l) and (l, k) are chiral
// partners with the same norm and are never merged.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eisenstein.hpp"

namespace gcf {

class GcTransform {
  public:
    GcTransform(i128 k, i128 l);  // domain error unless k >= 1 and l >= 0
    static GcTransform from_eisenstein(Eisenstein z);  // canonicalizes any nonzero z

    i128 k() const { return kl_.a; }
    i128 l() const { return kl_.b; }
    Eisenstein kl() const { return kl_; }
    u128 norm() const { return gcf::norm(kl_); }  // the area scale factor N_kl

    bool is_identity() const { return kl_.a == 1 && kl_.b == 0; }
    bool is_inflation() const { return kl_.b == 0 && kl_.a >= 2; }
    bool is_leapfrog() const { return kl_.a == 1 && kl_.b == 1; }
    GcTransform chiral_partner() const;  // (l, k); inflations are self-paired

    friend bool operator==(const GcTransform&, const GcTransform&) = default;

  private:
    Eisenstein kl_;
};

// Strict ordering by (norm, k, l); used wherever factor lists are sorted.
bool transform_less(const GcTransform& x, const GcTransform& y);

// Edge transformed by t: (k*a - l*b, l*a + (k+l)*b).
Eisenstein apply(const GcTransform& t, Eisenstein edge);

// Pre-image of edge under t, or nothing when the inversion is not integral.
// The raw quotient may lie outside the first sextant.
std::optional<Eisenstein> invert(const GcTransform& t, Eisenstein edge);

// Canonical form of the Eisenstein product; norms multiply and the order of
// the operands never matters.
GcTransform compose(const GcTransform& t1, const GcTransform& t2);

// All transforms with norm n (both members of each chiral pair), ascending k.
std::vector<GcTransform> enumerate_candidates(u128 n);

enum class TransformKind { identity, inflation, leapfrog, primary, composite };

struct TransformClass {
    TransformKind kind = TransformKind::identity;
    u128 inflation_factor = 1;         // the k of an inflation, otherwise 1
    std::vector<GcTransform> factors;  // decomposition when composite
};

// Basic factors of t: prime inflations (p, 0) from the content gcd(k, l),
// then prime-norm transforms from the Eisenstein factorization of the
// remaining content-free part. Sorted by (norm, k, l); composing the list in
// any order reproduces t exactly. A basic t comes back as the singleton [t].
std::vector<GcTransform> decompose(const GcTransform& t);

TransformClass classify(const GcTransform& t);

std::string to_string(const GcTransform& t);

}  // namespace gcf
