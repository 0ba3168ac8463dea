#include "srk/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace srk {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

void check_denominator(const RegularQuotient& q) {
    if (q.den.is_zero())
        raise(ErrorCode::invalid_parameter, "quotient denominator is identically zero");
}

}  // namespace

RegularMap::RegularMap(RegularQuotient q) : fn_(std::move(q)) {
    check_denominator(std::get<RegularQuotient>(fn_));
}

RegularMap::RegularMap(RegularQuotient q, Quaternion right_const)
    : fn_(std::move(q)), rc_(right_const) {
    check_denominator(std::get<RegularQuotient>(fn_));
}

RegularMap RegularMap::folded() const {
    if (!rc_) return *this;
    Quaternion c = *rc_;
    if (is_poly()) return RegularMap(right_multiply(poly(), c));
    return RegularMap(RegularQuotient{quotient().den, right_multiply(quotient().num, c)});
}

Quaternion t_transform(const RegularPoly& f, Quaternion q, double singular_tol) {
    Quaternion v = eval_poly(regular_conjugate(f), q);
    if (abs(v) < singular_tol)
        raise(ErrorCode::singular_point, "conjugate factor vanishes at the point");
    return inverse(v) * q * v;
}

Quaternion eval_quotient(const RegularQuotient& Q, Quaternion q, double singular_tol) {
    check_denominator(Q);
    Quaternion s = eval_poly(symmetrization(Q.den), q);
    if (abs(s) < singular_tol)
        raise(ErrorCode::singular_point, "point lies on a singular sphere of the quotient");
    Quaternion v = eval_poly(regular_conjugate(Q.den), q);
    Quaternion p = inverse(v) * q * v;
    return inverse(eval_poly(Q.den, p)) * eval_poly(Q.num, p);
}

Quaternion eval_map(const RegularMap& f, Quaternion q, double singular_tol) {
    Quaternion v = f.is_poly() ? eval_poly(f.poly(), q)
                               : eval_quotient(f.quotient(), q, singular_tol);
    if (f.right_const()) v = v * *f.right_const();
    return v;
}

RegularMap mobius_ball(Quaternion u, bool normalize) {
    if (!(abs(u) < 1.0))
        raise(ErrorCode::invalid_parameter, "mobius_ball needs |u| < 1");
    RegularQuotient Q{RegularPoly({Quaternion::one(), -conj(u)}),
                      RegularPoly({-u, Quaternion::one()})};
    if (!normalize) return RegularMap(std::move(Q));
    Quaternion c = (Quaternion::one() - conj(u)) * inverse(Quaternion::one() - u);
    return RegularMap(std::move(Q), c);
}

RegularPoly expand_quotient(const RegularQuotient& Q, int n_terms, double rho,
                            double singular_tol) {
    check_denominator(Q);
    if (n_terms < 1) raise(ErrorCode::invalid_parameter, "expansion needs n_terms >= 1");
    if (!(rho > 0.0) || !std::isfinite(rho))
        raise(ErrorCode::invalid_parameter, "expansion needs a positive finite radius");
    Quaternion d0 = Q.den.coeff(0);
    if (abs(d0) < singular_tol)
        raise(ErrorCode::singular_expansion, "denominator vanishes at 0");

    // den^s has real coefficients, so its modulus on the sphere |q| = rho is a
    // function of one angle; sample one slice circle. The winding number
    // catches roots strictly inside the disc, where the series would diverge.
    RegularPoly sym = symmetrization(Q.den);
    const int m = 256;
    double min_mod = std::numeric_limits<double>::infinity();
    double first_arg = 0.0, prev_arg = 0.0, total_turn = 0.0;
    for (int s = 0; s < m; ++s) {
        double theta = kTwoPi * s / m;
        Quaternion q{rho * std::cos(theta), rho * std::sin(theta), 0.0, 0.0};
        Quaternion val = eval_poly(sym, q);
        min_mod = std::min(min_mod, abs(val));
        double arg = std::atan2(val.x, val.w);
        if (s == 0) {
            first_arg = arg;
        } else {
            double d = arg - prev_arg;
            while (d > 3.2) d -= kTwoPi;
            while (d < -3.2) d += kTwoPi;
            total_turn += d;
        }
        prev_arg = arg;
    }
    {
        double d = first_arg - prev_arg;
        while (d > 3.2) d -= kTwoPi;
        while (d < -3.2) d += kTwoPi;
        total_turn += d;
    }
    if (min_mod < 10.0 * singular_tol)
        raise(ErrorCode::singular_expansion,
              "denominator symmetrization nearly vanishes on the working sphere");
    if (std::fabs(total_turn) > 3.2)
        raise(ErrorCode::singular_expansion,
              "denominator symmetrization has zeros inside the working disc");

    Quaternion d0_inv = inverse(d0);
    int dd = Q.den.degree();
    std::vector<Quaternion> h(static_cast<size_t>(n_terms));
    for (int n = 0; n < n_terms; ++n) {
        Quaternion acc = Q.num.coeff(static_cast<size_t>(n));
        int kmax = std::min(n, dd);
        for (int k = 1; k <= kmax; ++k)
            acc -= Q.den.coeffs[static_cast<size_t>(k)] * h[static_cast<size_t>(n - k)];
        h[static_cast<size_t>(n)] = d0_inv * acc;
    }
    return RegularPoly(std::move(h), rho);
}

RegularPoly expand_map(const RegularMap& f, int n_terms, double rho,
                       double singular_tol) {
    RegularMap ff = f.folded();
    if (ff.is_poly()) return ff.poly();
    return expand_quotient(ff.quotient(), n_terms, rho, singular_tol);
}

RegularPoly left_division(const RegularPoly& f, Quaternion xi) {
    int d = f.degree();
    if (d <= 0) return RegularPoly({}, f.radius);
    std::vector<Quaternion> b(static_cast<size_t>(d));
    b[static_cast<size_t>(d - 1)] = f.coeffs[static_cast<size_t>(d)];
    for (int n = d - 1; n >= 1; --n)
        b[static_cast<size_t>(n - 1)] =
            f.coeffs[static_cast<size_t>(n)] + xi * b[static_cast<size_t>(n)];
    return RegularPoly(std::move(b), f.radius);
}

SphericalCoeffs spherical_coeffs(const RegularMap& f, Quaternion q0,
                                 const QuotientOptions& opts) {
    RegularMap ff = f.folded();
    RegularPoly series;
    if (ff.is_poly()) {
        series = ff.poly();
    } else {
        if (!(abs(q0) < opts.working_radius))
            raise(ErrorCode::out_of_domain,
                  "spherical coefficients need |q0| below the working radius");
        series = expand_quotient(ff.quotient(), opts.expansion_terms,
                                 opts.working_radius, opts.singular_tolerance);
    }
    RegularPoly r1 = left_division(series, q0);
    Quaternion a1 = eval_poly(r1, conj(q0));
    RegularPoly r2 = left_division(r1, conj(q0));
    Quaternion a2 = eval_poly(r2, q0);
    return {a1, a2};
}

Quaternion directional_derivative(const RegularMap& f, Quaternion q0, Quaternion v,
                                  const QuotientOptions& opts) {
    if (std::fabs(abs(v) - 1.0) > 1e-9)
        raise(ErrorCode::invalid_parameter, "direction must be a unit quaternion");
    SphericalCoeffs sc = spherical_coeffs(f, q0, opts);
    return v * sc.a1 + (q0 * v - v * conj(q0)) * sc.a2;
}

Quaternion map_derivative_at(const RegularMap& f, Quaternion q0,
                             const QuotientOptions& opts) {
    SphericalCoeffs sc = spherical_coeffs(f, q0, opts);
    return sc.a1 + (2.0 * imag_part(q0)) * sc.a2;
}

RegularMap map_derivative(const RegularMap& f) {
    RegularMap ff = f.folded();
    if (ff.is_poly()) return RegularMap(slice_derivative(ff.poly()));
    const RegularQuotient& Q = ff.quotient();
    RegularPoly P = symmetrization(Q.den);
    RegularPoly N = star_product(regular_conjugate(Q.den), Q.num);
    RegularPoly num = poly_sub(star_product(P, slice_derivative(N)),
                               star_product(slice_derivative(P), N));
    return RegularMap(RegularQuotient{star_product(P, P), std::move(num)});
}

RegularMap map_sum(const RegularMap& f, const RegularMap& g) {
    RegularMap a = f.folded(), b = g.folded();
    if (a.is_poly() && b.is_poly()) return RegularMap(poly_add(a.poly(), b.poly()));
    if (a.is_poly() || b.is_poly()) {
        const RegularPoly& p = a.is_poly() ? a.poly() : b.poly();
        const RegularQuotient& Q = a.is_poly() ? b.quotient() : a.quotient();
        return RegularMap(
            RegularQuotient{Q.den, poly_add(star_product(Q.den, p), Q.num)});
    }
    const RegularQuotient& qa = a.quotient();
    const RegularQuotient& qb = b.quotient();
    RegularPoly pa = symmetrization(qa.den);
    RegularPoly na = star_product(regular_conjugate(qa.den), qa.num);
    RegularPoly pb = symmetrization(qb.den);
    RegularPoly nb = star_product(regular_conjugate(qb.den), qb.num);
    return RegularMap(RegularQuotient{
        star_product(pa, pb),
        poly_add(star_product(pb, na), star_product(pa, nb))});
}

RegularMap map_star(const RegularMap& f, const RegularMap& g) {
    RegularMap a = f.folded(), b = g.folded();
    if (a.is_poly() && b.is_poly())
        return RegularMap(star_product(a.poly(), b.poly()));
    if (b.is_poly()) {
        const RegularQuotient& Q = a.quotient();
        return RegularMap(RegularQuotient{Q.den, star_product(Q.num, b.poly())});
    }
    const RegularQuotient& qb = b.quotient();
    RegularPoly left_num = a.is_poly() ? a.poly() : a.quotient().num;
    RegularPoly num =
        star_product(star_product(left_num, regular_conjugate(qb.den)), qb.num);
    RegularPoly bs = symmetrization(qb.den);
    RegularPoly den = a.is_poly() ? bs : star_product(a.quotient().den, bs);
    return RegularMap(RegularQuotient{std::move(den), std::move(num)});
}

Quaternion cayley(Quaternion q) {
    Quaternion d = Quaternion::one() + q;
    if (abs(d) < 1e-300)
        raise(ErrorCode::pole_at_minus_one, "Cayley transform has a pole at -1");
    return inverse(d) * (Quaternion::one() - q);
}

}  // namespace srk
