#include "transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcf {

GcTransform::GcTransform(i128 k, i128 l) : kl_{k, l} {
    if (k < 1 || l < 0) {
        throw std::domain_error("transform must lie in the first sextant: k >= 1, l >= 0");
    }
}

GcTransform GcTransform::from_eisenstein(Eisenstein z) {
    Canonical c = canonical_sextant(z);
    return {c.value.a, c.value.b};
}

GcTransform GcTransform::chiral_partner() const {
    if (kl_.b == 0) return *this;
    return {kl_.b, kl_.a};
}

bool transform_less(const GcTransform& x, const GcTransform& y) {
    u128 nx = x.norm(), ny = y.norm();
    if (nx != ny) return nx < ny;
    if (x.k() != y.k()) return x.k() < y.k();
    return x.l() < y.l();
}

Eisenstein apply(const GcTransform& t, Eisenstein edge) {
    return mul(t.kl(), edge);
}

std::optional<Eisenstein> invert(const GcTransform& t, Eisenstein edge) {
    return exact_div(edge, t.kl());
}

GcTransform compose(const GcTransform& t1, const GcTransform& t2) {
    return GcTransform::from_eisenstein(mul(t1.kl(), t2.kl()));
}

std::vector<GcTransform> enumerate_candidates(u128 n) {
    std::vector<GcTransform> out;
    for (Eisenstein z : norm_form_solutions(n)) {
        out.emplace_back(z.a, z.b);
    }
    return out;
}

std::vector<GcTransform> decompose(const GcTransform& t) {
    std::vector<GcTransform> out;
    if (t.is_identity()) return out;
    // Content first: the rational gcd of (k, l) is the inflation part and is
    // split into prime inflations. What remains is content-free and factors
    // into prime-norm transforms only.
    u128 g = gcd_u128(magnitude(t.k()), magnitude(t.l()));
    for (const auto& [p, e] : factor_integer(g)) {
        for (int i = 0; i < e; ++i) out.emplace_back(static_cast<i128>(p), 0);
    }
    i128 gg = static_cast<i128>(g);
    Eisenstein core{t.k() / gg, t.l() / gg};
    if (!(core == Eisenstein{1, 0})) {
        Factorization f = factorize(core);
        for (const auto& pp : f.factors) {
            for (int i = 0; i < pp.exponent; ++i) {
                out.push_back(GcTransform::from_eisenstein(pp.prime));
            }
        }
    }
    std::sort(out.begin(), out.end(), transform_less);
    return out;
}

TransformClass classify(const GcTransform& t) {
    TransformClass c;
    if (t.is_identity()) {
        c.kind = TransformKind::identity;
        return c;
    }
    if (t.is_inflation()) {
        c.kind = TransformKind::inflation;
        c.inflation_factor = magnitude(t.k());
        return c;
    }
    if (t.is_leapfrog()) {
        c.kind = TransformKind::leapfrog;
        return c;
    }
    auto factors = decompose(t);
    if (factors.size() <= 1) {
        c.kind = TransformKind::primary;
        return c;
    }
    c.kind = TransformKind::composite;
    c.factors = std::move(factors);
    return c;
}

std::string to_string(const GcTransform& t) {
    return gcf::to_string(t.kl());
}

}  // namespace gcf
