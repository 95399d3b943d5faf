#include "eisenstein.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace gcf {

Eisenstein add(Eisenstein x, Eisenstein y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

Eisenstein sub(Eisenstein x, Eisenstein y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

Eisenstein negate(Eisenstein z) {
    return {checked_sub(i128{0}, z.a), checked_sub(i128{0}, z.b)};
}

Eisenstein mul(Eisenstein x, Eisenstein y) {
    i128 ac = checked_mul(x.a, y.a);
    i128 bd = checked_mul(x.b, y.b);
    i128 bc = checked_mul(x.b, y.a);
    i128 ad = checked_mul(x.a, y.b);
    return {checked_sub(ac, bd), checked_add(checked_add(bc, ad), bd)};
}

Eisenstein conj(Eisenstein z) {
    return {checked_add(z.a, z.b), checked_sub(i128{0}, z.b)};
}

u128 norm(Eisenstein z) {
    // Split by sign so the whole computation stays in unsigned 128 bits:
    // a^2 + b^2 >= |ab| always, so the mixed-sign branch cannot underflow.
    u128 aa = magnitude(z.a);
    u128 bb = magnitude(z.b);
    u128 sum = checked_add(checked_mul(aa, aa), checked_mul(bb, bb));
    u128 ab = checked_mul(aa, bb);
    bool same_sign = (z.a < 0) == (z.b < 0);
    return same_sign ? checked_add(sum, ab) : sum - ab;
}

Eisenstein rotate60(Eisenstein z) {
    return {checked_sub(i128{0}, z.b), checked_add(z.a, z.b)};
}

Eisenstein unit_value(int m) {
    static const std::array<Eisenstein, 6> units = {{
        {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
    }};
    if (m < 0 || m > 5) throw std::domain_error("unit power must lie in 0..5");
    return units[static_cast<size_t>(m)];
}

std::optional<int> as_unit_power(Eisenstein z) {
    for (int m = 0; m < 6; ++m) {
        if (z == unit_value(m)) return m;
    }
    return std::nullopt;
}

Canonical canonical_sextant(Eisenstein z) {
    if (is_zero(z)) throw std::domain_error("canonical sextant of zero");
    Eisenstein v = z;
    for (int m = 0; m < 6; ++m) {
        if (v.a > 0 && v.b >= 0) return {v, m};
        v = rotate60(v);
    }
    throw std::logic_error("no associate in the first sextant");
}

std::optional<Eisenstein> exact_div(Eisenstein x, Eisenstein d) {
    if (is_zero(d)) throw std::domain_error("division by zero Eisenstein integer");
    Eisenstein num = mul(x, conj(d));
    u128 n = norm(d);
    constexpr u128 i128_max = (u128{1} << 127) - 1;
    if (n > i128_max) {
        // |num| < n for any representable numerator, so only zero divides.
        if (is_zero(num)) return Eisenstein{0, 0};
        return std::nullopt;
    }
    i128 nn = static_cast<i128>(n);
    if (num.a % nn != 0 || num.b % nn != 0) return std::nullopt;
    return Eisenstein{num.a / nn, num.b / nn};
}

Eisenstein Factorization::reconstruct() const {
    Eisenstein r = unit_value(unit_power);
    for (const auto& pp : factors) {
        for (int i = 0; i < pp.exponent; ++i) r = mul(r, pp.prime);
    }
    return r;
}

bool is_prime(u128 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (u128 d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<u128, int>> factor_integer(u128 n) {
    std::vector<std::pair<u128, int>> out;
    auto take = [&](u128 p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    if (n < 2) return out;
    take(2);
    take(3);
    for (u128 d = 5; d <= n / d; d += 6) {
        take(d);
        take(d + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<Eisenstein> norm_form_solutions(u128 n) {
    std::vector<Eisenstein> out;
    if (n == 0) return out;
    u128 four_n = checked_mul(n, u128{4});
    for (u128 k = 1; k <= n / k; ++k) {
        // k^2 + kl + l^2 = n  =>  l = (-k + sqrt(4n - 3k^2)) / 2
        u128 disc = four_n - 3 * k * k;
        u128 s = isqrt_u128(disc);
        if (s * s != disc) continue;
        if (s < k || (s - k) % 2 != 0) continue;
        u128 l = (s - k) / 2;
        out.push_back({static_cast<i128>(k), static_cast<i128>(l)});
    }
    return out;
}

Eisenstein prime_above(u128 p) {
    auto sols = norm_form_solutions(p);
    if (sols.empty()) {
        throw std::domain_error("no Eisenstein prime of norm " + to_string(p));
    }
    return sols.front();
}

Factorization factorize(Eisenstein z) {
    if (is_zero(z)) throw std::domain_error("factorize zero");
    Factorization out;
    Eisenstein rest = z;
    for (const auto& [p, e] : factor_integer(norm(z))) {
        (void)e;
        if (p == 3) {
            const Eisenstein lambda{1, 1};
            int count = 0;
            while (auto q = exact_div(rest, lambda)) {
                rest = *q;
                ++count;
            }
            if (count > 0) out.factors.push_back({lambda, count});
        } else if (p % 3 == 1) {
            Eisenstein pi = prime_above(p);
            Eisenstein pi_conj = canonical_sextant(conj(pi)).value;
            int c1 = 0;
            while (auto q = exact_div(rest, pi)) {
                rest = *q;
                ++c1;
            }
            int c2 = 0;
            while (auto q = exact_div(rest, pi_conj)) {
                rest = *q;
                ++c2;
            }
            if (c1 > 0) out.factors.push_back({pi, c1});
            if (c2 > 0) out.factors.push_back({pi_conj, c2});
        } else {
            // p = 2 (mod 3) is inert: it divides z as the rational (p, 0)
            // and contributes the even exponent e/2.
            const Eisenstein embedded{static_cast<i128>(p), 0};
            int count = 0;
            while (auto q = exact_div(rest, embedded)) {
                rest = *q;
                ++count;
            }
            if (count > 0) out.factors.push_back({embedded, count});
        }
    }
    auto m = as_unit_power(rest);
    if (!m) throw std::logic_error("factorization residue is not a unit");
    out.unit_power = *m;
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower& x, const PrimePower& y) {
                  u128 nx = norm(x.prime), ny = norm(y.prime);
                  if (nx != ny) return nx < ny;
                  if (x.prime.a != y.prime.a) return x.prime.a < y.prime.a;
                  return x.prime.b < y.prime.b;
              });
    return out;
}

std::string to_string(Eisenstein z) {
    return "(" + to_string(z.a) + ", " + to_string(z.b) + ")";
}

}  // namespace gcf
