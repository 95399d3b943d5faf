#include "fullerene.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gcf {

FacetDims::FacetDims(i128 k, i128 l, i128 p, i128 q) : k_(k), l_(l), p_(p), q_(q) {
    if (k < 0 || l < 0 || p < 0 || q < 0) {
        throw std::domain_error("facet coordinates must be nonnegative");
    }
    if (facet_area(*this) < 1) {
        throw std::domain_error("facet area must be positive");
    }
}

u128 facet_area(const FacetDims& f) {
    u128 k = magnitude(f.k()), l = magnitude(f.l());
    u128 p = magnitude(f.p()), q = magnitude(f.q());
    return checked_add(checked_add(checked_mul(k, p), checked_mul(k, q)),
                       checked_mul(l, q));
}

u128 edge_square(Eisenstein e) {
    if (is_zero(e)) throw std::domain_error("edge must be nonzero");
    return norm(e);
}

FullereneDims::FullereneDims(std::vector<Eisenstein> edges,
                             std::vector<FacetDims> facets, std::string name)
    : edges_(std::move(edges)), facets_(std::move(facets)), name_(std::move(name)) {
    if (edges_.empty()) throw std::domain_error("at least one master edge is required");
    for (const Eisenstein& e : edges_) {
        if (is_zero(e)) throw std::domain_error("edges must be nonzero");
        if (e.a < 0 || e.b < 0) {
            throw std::domain_error("edge coordinates must be nonnegative Coxeter pairs");
        }
    }
}

u128 detect_inflation(const FullereneDims& d) {
    u128 g = 0;
    for (const Eisenstein& e : d.edges()) {
        g = gcd_u128(g, magnitude(e.a));
        g = gcd_u128(g, magnitude(e.b));
    }
    return g;
}

bool leapfrog_test(const FullereneDims& d) {
    for (const Eisenstein& e : d.edges()) {
        if ((e.a - e.b) % 3 != 0) return false;
    }
    return true;
}

u128 area_scale_factor(const FullereneDims& d) {
    u128 g = 0;
    for (const Eisenstein& e : d.edges()) g = gcd_u128(g, edge_square(e));
    for (const FacetDims& f : d.facets()) g = gcd_u128(g, facet_area(f));
    return g;
}

FullereneDims deflate(const FullereneDims& d, u128 g) {
    if (g < 2) throw std::domain_error("deflation factor must be >= 2");
    i128 gg = static_cast<i128>(g);
    auto divide = [&](i128 v) {
        if (v % gg != 0) throw std::domain_error("coordinate not divisible by " + to_string(g));
        return v / gg;
    };
    std::vector<Eisenstein> edges;
    edges.reserve(d.edges().size());
    for (const Eisenstein& e : d.edges()) edges.push_back({divide(e.a), divide(e.b)});
    std::vector<FacetDims> facets;
    facets.reserve(d.facets().size());
    for (const FacetDims& f : d.facets()) {
        facets.emplace_back(divide(f.k()), divide(f.l()), divide(f.p()), divide(f.q()));
    }
    return FullereneDims(std::move(edges), std::move(facets), d.name());
}

FullereneDims transform_dims(const FullereneDims& d, const GcTransform& t) {
    std::vector<Eisenstein> edges;
    edges.reserve(d.edges().size());
    for (const Eisenstein& e : d.edges()) {
        edges.push_back(canonical_sextant(apply(t, e)).value);
    }
    std::vector<FacetDims> facets;
    facets.reserve(d.facets().size());
    for (const FacetDims& f : d.facets()) {
        Eisenstein s1 = canonical_sextant(apply(t, f.first_pair())).value;
        Eisenstein s2 = canonical_sextant(apply(t, f.second_pair())).value;
        facets.emplace_back(s1.a, s1.b, s2.a, s2.b);
    }
    return FullereneDims(std::move(edges), std::move(facets), d.name());
}

u128 IdentificationReport::norm_product() const {
    u128 p = 1;
    for (const GcTransform& t : chain) p = checked_mul(p, t.norm());
    return p;
}

namespace {

bool all_invertible(const FullereneDims& d, const GcTransform& t) {
    for (const Eisenstein& e : d.edges()) {
        if (!invert(t, e)) return false;
    }
    for (const FacetDims& f : d.facets()) {
        if (!invert(t, f.first_pair()) || !invert(t, f.second_pair())) return false;
    }
    return true;
}

// Inverts every edge and facet pair by t, repairing orientation per item with
// the canonical-sextant unit. Repairs and facet-pair mismatches are noted.
FullereneDims apply_inversion(const FullereneDims& d, const GcTransform& t,
                              std::vector<std::string>& notes) {
    std::vector<Eisenstein> edges;
    edges.reserve(d.edges().size());
    for (size_t i = 0; i < d.edges().size(); ++i) {
        Canonical c = canonical_sextant(*invert(t, d.edges()[i]));
        if (c.unit_power != 0) {
            notes.push_back("edge " + std::to_string(i) + ": rotated by w^" +
                            std::to_string(c.unit_power) + " after inverting " +
                            to_string(t));
        }
        edges.push_back(c.value);
    }
    std::vector<FacetDims> facets;
    facets.reserve(d.facets().size());
    for (size_t i = 0; i < d.facets().size(); ++i) {
        const FacetDims& f = d.facets()[i];
        Canonical c1 = canonical_sextant(*invert(t, f.first_pair()));
        Canonical c2 = canonical_sextant(*invert(t, f.second_pair()));
        if (c1.unit_power != c2.unit_power) {
            notes.push_back("facet " + std::to_string(i) +
                            ": pair rotations differ after inverting " + to_string(t) +
                            " (w^" + std::to_string(c1.unit_power) + " vs w^" +
                            std::to_string(c2.unit_power) + ")");
        }
        facets.emplace_back(c1.value.a, c1.value.b, c2.value.a, c2.value.b);
    }
    return FullereneDims(std::move(edges), std::move(facets), d.name());
}

void note_once(std::vector<std::string>& notes, std::string text) {
    if (std::find(notes.begin(), notes.end(), text) == notes.end()) {
        notes.push_back(std::move(text));
    }
}

}  // namespace

IdentificationReport identify(const FullereneDims& d) {
    FullereneDims current = d;
    std::vector<GcTransform> chain;
    std::vector<std::string> notes;
    std::vector<GcTransform> alternates;
    std::vector<u128> residual;
    u128 inflation_total = 1;

    for (;;) {
        bool reduced = false;

        // Step 1: inflation. The usable factor is the gcd of everything
        // supplied; facet coordinates can only lower it.
        u128 edge_gcd = detect_inflation(current);
        u128 g = edge_gcd;
        for (const FacetDims& f : current.facets()) {
            g = gcd_u128(g, magnitude(f.k()));
            g = gcd_u128(g, magnitude(f.l()));
            g = gcd_u128(g, magnitude(f.p()));
            g = gcd_u128(g, magnitude(f.q()));
        }
        if (g < edge_gcd && edge_gcd > 1) {
            note_once(notes, "inflation limited to " + to_string(g) +
                                 " by facet coordinates (edge gcd " +
                                 to_string(edge_gcd) + ")");
        }
        if (g > 1) {
            for (const auto& [p, e] : factor_integer(g)) {
                for (int i = 0; i < e; ++i) {
                    current = deflate(current, p);
                    chain.emplace_back(static_cast<i128>(p), 0);
                    inflation_total = checked_mul(inflation_total, p);
                }
            }
            reduced = true;
        }

        // Step 2 and 3: area scale factor, then one candidate inversion per
        // prime factor in ascending order; both chiralities are tried with
        // k >= l preferred. The first accepted candidate restarts the loop.
        u128 n = area_scale_factor(current);
        std::vector<u128> pass_residual;
        bool peeled = false;
        for (const auto& [p, e] : factor_integer(n)) {
            (void)e;
            auto candidates = enumerate_candidates(p);
            std::sort(candidates.begin(), candidates.end(),
                      [](const GcTransform& x, const GcTransform& y) {
                          return x.k() > y.k();
                      });
            std::optional<GcTransform> chosen;
            std::optional<GcTransform> alternate;
            for (const GcTransform& c : candidates) {
                if (all_invertible(current, c)) {
                    if (!chosen) {
                        chosen = c;
                    } else {
                        alternate = c;
                    }
                }
            }
            if (chosen) {
                if (alternate) {
                    alternates.push_back(*alternate);
                    notes.push_back("prime " + to_string(p) +
                                    ": both chiralities invert; kept " +
                                    to_string(*chosen) + ", alternate " +
                                    to_string(*alternate));
                }
                current = apply_inversion(current, *chosen, notes);
                chain.push_back(*chosen);
                peeled = true;
                break;
            }
            pass_residual.push_back(p);
        }

        if (peeled) continue;
        if (!reduced) {
            residual = std::move(pass_residual);
            break;
        }
    }

    return IdentificationReport{d,
                                inflation_total,
                                area_scale_factor(d),
                                std::move(chain),
                                std::move(current),
                                std::move(residual),
                                std::move(notes),
                                std::move(alternates)};
}

}  // namespace gcf
