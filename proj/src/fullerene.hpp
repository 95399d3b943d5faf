// Fullerene dimension sets — Coxeter coordinates of the master edges plus
// optional facet coordinate quadruples — and the identification pipeline
// that recovers the chain of basic sub-transformations and the ultimate
// archetype from those dimensions alone.
#pragma once

#include <string>
#include <vector>

#include "transform.hpp"

namespace gcf {

// One facet, spanned by the Coxeter pairs (k, l) and (p, q).
class FacetDims {
  public:
    FacetDims(i128 k, i128 l, i128 p, i128 q);  // all >= 0, area >= 1

    i128 k() const { return k_; }
    i128 l() const { return l_; }
    i128 p() const { return p_; }
    i128 q() const { return q_; }
    Eisenstein first_pair() const { return {k_, l_}; }
    Eisenstein second_pair() const { return {p_, q_}; }

    friend bool operator==(const FacetDims&, const FacetDims&) = default;

  private:
    i128 k_, l_, p_, q_;
};

// Facet area kp + kq + lq: the lattice determinant of the two side vectors
// (k + lw) and (pw + qw^2).
u128 facet_area(const FacetDims& f);

// Square of a master edge = its norm; equals the area of the triangular
// patch the edge spans.
u128 edge_square(Eisenstein e);  // domain error on zero

class FullereneDims {
  public:
    explicit FullereneDims(std::vector<Eisenstein> edges,
                           std::vector<FacetDims> facets = {},
                           std::string name = {});
    // Invariants: edges nonempty; every edge nonzero with a >= 0, b >= 0.

    const std::vector<Eisenstein>& edges() const { return edges_; }
    const std::vector<FacetDims>& facets() const { return facets_; }
    const std::string& name() const { return name_; }

    friend bool operator==(const FullereneDims&, const FullereneDims&) = default;

  private:
    std::vector<Eisenstein> edges_;
    std::vector<FacetDims> facets_;
    std::string name_;
};

// gcd over all edge coordinates; > 1 certifies a g-inflation fullerene.
u128 detect_inflation(const FullereneDims& d);

// True iff every edge has a == b (mod 3), i.e. the (1, 1) transform inverts.
bool leapfrog_test(const FullereneDims& d);

// gcd of all edge squares and all facet areas (facets only if present).
u128 area_scale_factor(const FullereneDims& d);

// Every edge and facet coordinate divided by g (>= 2); domain error when
// some coordinate is not divisible.
FullereneDims deflate(const FullereneDims& d, u128 g);

// Every edge and both facet pairs transformed by t, then canonicalized back
// to first-sextant Coxeter coordinates.
FullereneDims transform_dims(const FullereneDims& d, const GcTransform& t);

struct IdentificationReport {
    FullereneDims input;
    u128 inflation_factor = 1;        // product of the applied prime inflations
    u128 area_scale_factor = 1;       // gcd of the input squares and areas
    std::vector<GcTransform> chain;   // basic sub-transformations, applied order
    FullereneDims archetype;
    std::vector<u128> residual_primes;  // prime factors that produced no inversion
    std::vector<std::string> notes;     // per-edge unit repairs, facet flags
    std::vector<GcTransform> alternates;  // other chirality that also inverted

    u128 norm_product() const;  // product of the chain norms
};

// Peels basic sub-transformations until none applies: first the coordinate
// gcd as prime inflations, then for each prime factor of the area scale
// factor every norm-form candidate (both chiralities, k >= l preferred),
// accepting a candidate when it inverts every edge and facet pair. Total:
// a fullerene that is its own archetype yields an empty chain.
IdentificationReport identify(const FullereneDims& d);

}  // namespace gcf
