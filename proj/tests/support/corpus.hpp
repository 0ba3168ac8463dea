#pragma once

// Seeded map families shared by the property suites and the acceptance runner.

#include <optional>
#include <vector>

#include "srk/boundary.hpp"
#include "srk/quotient.hpp"
#include "srk/rng.hpp"

namespace corpus {

using srk::Quaternion;
using srk::RegularMap;
using srk::RegularPoly;
using srk::RegularQuotient;
using srk::Rng;

inline RegularPoly random_poly(Rng& rng, int max_deg, double coeff_scale) {
    int deg = 1 + static_cast<int>(rng.uniform() * max_deg);
    std::vector<Quaternion> c(static_cast<size_t>(deg) + 1);
    for (auto& a : c) a = rng.box4(coeff_scale);
    return RegularPoly(std::move(c));
}

// Ball self-map: coefficients rescaled so sum |a_n| <= cap < 1.
inline RegularPoly contraction_poly(Rng& rng, int max_deg, double cap) {
    RegularPoly p = random_poly(rng, max_deg, 1.0);
    double s = 0.0;
    for (const auto& a : p.coeffs) s += abs(a);
    if (s == 0.0) return RegularPoly({Quaternion{cap / 2, 0, 0, 0}});
    return scale(p, cap * rng.uniform(0.3, 1.0) / s);
}

// Self-map fixing 1: nonnegative real coefficients summing to one.
inline RegularPoly stochastic_poly(Rng& rng, int max_deg) {
    int deg = 1 + static_cast<int>(rng.uniform() * max_deg);
    std::vector<double> w(static_cast<size_t>(deg) + 1);
    double s = 0.0;
    for (auto& v : w) {
        v = rng.uniform();
        s += v;
    }
    std::vector<Quaternion> c;
    c.reserve(w.size());
    for (double v : w) c.push_back(Quaternion{v / s, 0, 0, 0});
    return RegularPoly(std::move(c));
}

struct BlaschkeCase {
    RegularMap f;
    double alpha;    // exact Julia constant at 1
    Quaternion eta;  // exact boundary value at 1
};

// *-product of Mobius factors. Along the real radius the factors commute
// with the point, so moduli multiply and both alpha and eta are exact:
// alpha = sum (1-|u|^2)/|1-u|^2, eta = prod (1-conj u)^{-1}(1-u).
inline BlaschkeCase random_blaschke(Rng& rng, int n_factors, double u_cap) {
    Quaternion one = Quaternion::one();
    std::optional<RegularMap> f;
    double alpha = 0.0;
    Quaternion eta = one;
    for (int i = 0; i < n_factors; ++i) {
        Quaternion u = rng.ball4(u_cap);
        alpha += (1.0 - norm_sq(u)) / norm_sq(one - u);
        eta = eta * (inverse(one - conj(u)) * (one - u));
        RegularMap m = mobius_ball(u, false);
        f = f ? map_star(*f, m) : m;
    }
    return {*f, alpha, eta};
}

// a*q + b + sum_i c_i (q + d_i)^{-1} with a, c_i, d_i > 0 and Re b >= 0,
// assembled over the common real denominator prod (q + d_i).
inline RegularMap random_positive_real(Rng& rng, int max_poles) {
    double a = rng.uniform(0.1, 3.0);
    Quaternion b = Quaternion{rng.uniform(0.0, 2.0), 0, 0, 0} +
                   rng.unit_imaginary() * rng.uniform(0.0, 2.0);
    int n = static_cast<int>(rng.uniform() * (max_poles + 1));
    std::vector<double> c(static_cast<size_t>(n)), d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        c[static_cast<size_t>(i)] = rng.uniform(0.1, 2.0);
        d[static_cast<size_t>(i)] = rng.uniform(0.2, 3.0);
    }
    RegularPoly den({Quaternion::one()});
    for (int i = 0; i < n; ++i)
        den = star_product(den, RegularPoly({Quaternion{d[static_cast<size_t>(i)], 0, 0, 0},
                                             Quaternion::one()}));
    RegularPoly num = star_product(RegularPoly({b, Quaternion{a, 0, 0, 0}}), den);
    for (int i = 0; i < n; ++i) {
        RegularPoly rest({Quaternion::one()});
        for (int j = 0; j < n; ++j)
            if (j != i)
                rest = star_product(rest, RegularPoly({Quaternion{d[static_cast<size_t>(j)], 0, 0, 0},
                                                       Quaternion::one()}));
        num = poly_add(num, scale(rest, c[static_cast<size_t>(i)]));
    }
    if (n == 0) return RegularMap(num);
    return RegularMap(RegularQuotient{std::move(den), std::move(num)});
}

// Ball maps into the closed right half-space vanishing at -1 to first order:
// a*(1-q)^{-1}(1+q) + c*(1+q) + e*(q+d)^{-1}(1+q), d > 1, a,c,e >= 0 not all 0.
inline RegularMap random_halfplane_vanishing(Rng& rng) {
    double a = rng.uniform() < 0.7 ? rng.uniform(0.1, 2.0) : 0.0;
    double c = rng.uniform() < 0.7 ? rng.uniform(0.1, 2.0) : 0.0;
    double e = (a == 0.0 && c == 0.0) || rng.uniform() < 0.5 ? rng.uniform(0.1, 2.0) : 0.0;
    RegularPoly lin({Quaternion::one(), Quaternion::one()});  // 1 + q
    std::optional<RegularMap> f;
    auto acc = [&](RegularMap m) { f = f ? map_sum(*f, m) : m; };
    if (a > 0.0)
        acc(RegularMap(RegularQuotient{RegularPoly({Quaternion::one(), -Quaternion::one()}),
                                       scale(lin, a)}));
    if (c > 0.0) acc(RegularMap(scale(lin, c)));
    if (e > 0.0) {
        double d = rng.uniform(1.5, 4.0);
        acc(RegularMap(RegularQuotient{RegularPoly({Quaternion{d, 0, 0, 0}, Quaternion::one()}),
                                       scale(lin, e)}));
    }
    return *f;
}

}  // namespace corpus
