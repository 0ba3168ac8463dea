#pragma once

#include <optional>
#include <variant>

#include "srk/poly.hpp"

namespace srk {

// Values of a symmetrized denominator below this modulus count as singular.
inline constexpr double kSingularTolerance = 1e-10;
// Default truncation length and working radius for series expansion of
// quotients that are regular past the closed unit ball.
inline constexpr int kExpansionTerms = 64;
inline constexpr double kWorkingRadius = 1.0 + 1.0 / 16.0;

struct QuotientOptions {
    double singular_tolerance = kSingularTolerance;
    int expansion_terms = kExpansionTerms;
    double working_radius = kWorkingRadius;
};

// den^{-*} * num. Never expanded implicitly: evaluation routes through the
// transform q -> den^c(q)^{-1} q den^c(q).
struct RegularQuotient {
    RegularPoly den;
    RegularPoly num;
};

// A polynomial or a regular quotient, optionally *-multiplied on the right by
// a constant (which acts coefficientwise, so it folds into the numerator).
class RegularMap {
public:
    RegularMap() : fn_(RegularPoly{}) {}
    RegularMap(RegularPoly p) : fn_(std::move(p)) {}
    RegularMap(RegularQuotient q);
    RegularMap(RegularPoly p, Quaternion right_const)
        : fn_(std::move(p)), rc_(right_const) {}
    RegularMap(RegularQuotient q, Quaternion right_const);

    bool is_poly() const { return std::holds_alternative<RegularPoly>(fn_); }
    const RegularPoly& poly() const { return std::get<RegularPoly>(fn_); }
    const RegularQuotient& quotient() const { return std::get<RegularQuotient>(fn_); }
    const std::optional<Quaternion>& right_const() const { return rc_; }

    // Same map with the right constant merged into the coefficients.
    RegularMap folded() const;

private:
    std::variant<RegularPoly, RegularQuotient> fn_;
    std::optional<Quaternion> rc_;
};

// T_f(q) = f^c(q)^{-1} q f^c(q). Preserves |q| and Re(q); T_f and T_{f^c} are
// mutually inverse where defined. SingularPoint when f^c(q) ~ 0.
Quaternion t_transform(const RegularPoly& f, Quaternion q,
                       double singular_tol = kSingularTolerance);

// den^{-*}*num at q = den(T(q))^{-1} num(T(q)) with T = T_den. SingularPoint
// when |den^s(q)| < singular_tol (that modulus equals |den^c(q)|*|den(T(q))|,
// so it guards both inversions at once).
Quaternion eval_quotient(const RegularQuotient& Q, Quaternion q,
                         double singular_tol = kSingularTolerance);

Quaternion eval_map(const RegularMap& f, Quaternion q,
                    double singular_tol = kSingularTolerance);

// (1 - q conj(u))^{-*} * (q - u) for |u| < 1; sends u to 0 and the unit
// sphere to itself. With normalize, a right constant (1-conj(u))(1-u)^{-1}
// makes the map fix 1.
RegularMap mobius_ball(Quaternion u, bool normalize = false);

// Truncated series of den^{-*}*num: h_n = den(0)^{-1}(num_n - sum_{k>=1}
// den_k h_{n-k}). Requires den(0) != 0 and den^s zero-free on |q| <= rho,
// checked by sampling den^s on the slice circle of radius rho: minimum
// modulus >= 10*singular_tol and winding number zero (a nonzero winding
// betrays roots inside the disc, where the series could not converge).
// The result carries declared radius rho.
RegularPoly expand_quotient(const RegularQuotient& Q, int n_terms,
                            double rho = kWorkingRadius,
                            double singular_tol = kSingularTolerance);

// Expansion of any map; polynomials pass through exactly (right constant folded).
RegularPoly expand_map(const RegularMap& f, int n_terms,
                       double rho = kWorkingRadius,
                       double singular_tol = kSingularTolerance);

// R_xi f = (q - xi)^{-*} * (f(q) - f(xi)), exact for polynomials via the
// top-down recurrence b_{n-1} = a_n + xi*b_n (so b_k = sum_{m>k} xi^{m-1-k} a_m).
RegularPoly left_division(const RegularPoly& f, Quaternion xi);

// A1 = (R_{q0} f)(conj(q0)), A2 = (R_{conj(q0)} R_{q0} f)(q0): the spherical
// difference-quotient coefficients at q0. Quotients are expanded first; the
// working radius must exceed |q0|.
struct SphericalCoeffs {
    Quaternion a1;
    Quaternion a2;
};

SphericalCoeffs spherical_coeffs(const RegularMap& f, Quaternion q0,
                                 const QuotientOptions& opts = {});

// df/dv(q0) = v*A1 + (q0*v - v*conj(q0))*A2 for |v| = 1.
Quaternion directional_derivative(const RegularMap& f, Quaternion q0, Quaternion v,
                                  const QuotientOptions& opts = {});

// Slice derivative evaluated at q0; equals A1 + 2 Im(q0) A2.
Quaternion map_derivative_at(const RegularMap& f, Quaternion q0,
                             const QuotientOptions& opts = {});

// Exact derivative as a map. For a quotient the denominator is first made
// real via den^s, then (P^{-*}N)' = (P*P)^{-*}(P*N' - P'*N).
RegularMap map_derivative(const RegularMap& f);

// Pointwise sum; closes over quotients by passing real symmetrized
// denominators through the *-product.
RegularMap map_sum(const RegularMap& f, const RegularMap& g);

// *-product of maps: with f = a^{-*}n_f, g = b^{-*}n_g this is
// (a * b^s)^{-*} * (n_f * b^c * n_g), using that b^s is real and central.
RegularMap map_star(const RegularMap& f, const RegularMap& g);

// Cayley transform (1+q)^{-1}(1-q); PoleAtMinusOne at q = -1.
Quaternion cayley(Quaternion q);

}  // namespace srk
