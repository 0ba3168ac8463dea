#include "srk/poly.hpp"

#include <cmath>

namespace srk {

Quaternion eval_poly(const RegularPoly& f, Quaternion q) {
    if (std::isfinite(f.radius) && !(abs(q) < f.radius))
        raise(ErrorCode::out_of_domain, "evaluation outside declared radius");
    Quaternion acc{};
    for (size_t n = f.coeffs.size(); n-- > 0;) acc = q * acc + f.coeffs[n];
    return acc;
}

RegularPoly star_product(const RegularPoly& f, const RegularPoly& g) {
    double r = std::min(f.radius, g.radius);
    if (f.is_zero() || g.is_zero()) return RegularPoly({}, r);
    std::vector<Quaternion> c(f.coeffs.size() + g.coeffs.size() - 1);
    for (size_t a = 0; a < f.coeffs.size(); ++a)
        for (size_t b = 0; b < g.coeffs.size(); ++b) c[a + b] += f.coeffs[a] * g.coeffs[b];
    return RegularPoly(std::move(c), r);
}

RegularPoly regular_conjugate(const RegularPoly& f) {
    std::vector<Quaternion> c(f.coeffs.size());
    for (size_t n = 0; n < c.size(); ++n) c[n] = conj(f.coeffs[n]);
    return RegularPoly(std::move(c), f.radius);
}

RegularPoly symmetrization(const RegularPoly& f) {
    return star_product(f, regular_conjugate(f));
}

RegularPoly slice_derivative(const RegularPoly& f) {
    if (f.coeffs.size() <= 1) return RegularPoly({}, f.radius);
    std::vector<Quaternion> c(f.coeffs.size() - 1);
    for (size_t n = 0; n < c.size(); ++n)
        c[n] = static_cast<double>(n + 1) * f.coeffs[n + 1];
    return RegularPoly(std::move(c), f.radius);
}

RegularPoly poly_add(const RegularPoly& f, const RegularPoly& g) {
    std::vector<Quaternion> c(std::max(f.coeffs.size(), g.coeffs.size()));
    for (size_t n = 0; n < c.size(); ++n) c[n] = f.coeff(n) + g.coeff(n);
    return RegularPoly(std::move(c), std::min(f.radius, g.radius));
}

RegularPoly poly_sub(const RegularPoly& f, const RegularPoly& g) {
    std::vector<Quaternion> c(std::max(f.coeffs.size(), g.coeffs.size()));
    for (size_t n = 0; n < c.size(); ++n) c[n] = f.coeff(n) - g.coeff(n);
    return RegularPoly(std::move(c), std::min(f.radius, g.radius));
}

RegularPoly right_multiply(const RegularPoly& f, Quaternion c) {
    std::vector<Quaternion> out(f.coeffs.size());
    for (size_t n = 0; n < out.size(); ++n) out[n] = f.coeffs[n] * c;
    return RegularPoly(std::move(out), f.radius);
}

RegularPoly monomial_multiply(const RegularPoly& f, int k) {
    if (f.is_zero()) return f;
    std::vector<Quaternion> out(f.coeffs.size() + static_cast<size_t>(k));
    for (size_t n = 0; n < f.coeffs.size(); ++n) out[n + k] = f.coeffs[n];
    return RegularPoly(std::move(out), f.radius);
}

RegularPoly scale(const RegularPoly& f, double s) {
    std::vector<Quaternion> out(f.coeffs.size());
    for (size_t n = 0; n < out.size(); ++n) out[n] = f.coeffs[n] * s;
    return RegularPoly(std::move(out), f.radius);
}

SplitComponents split(const RegularPoly& f, UnitImaginary I, UnitImaginary J) {
    Quaternion vi = I.value(), vj = J.value();
    if (std::fabs(inner(vi, vj)) > 1e-12)
        raise(ErrorCode::not_orthogonal, "split axes are not orthogonal");
    Quaternion vk = vi * vj;
    SplitComponents out;
    out.f_part.resize(f.coeffs.size());
    out.g_part.resize(f.coeffs.size());
    for (size_t n = 0; n < f.coeffs.size(); ++n) {
        Quaternion a = f.coeffs[n];
        // a = p0 + p1 I + (p2 + p3 I) J in the orthonormal basis {1, I, J, IJ}.
        out.f_part[n] = {inner(a, Quaternion::one()), inner(a, vi)};
        out.g_part[n] = {inner(a, vj), inner(a, vk)};
    }
    while (!out.f_part.empty() && out.f_part.back()[0] == 0.0 && out.f_part.back()[1] == 0.0)
        out.f_part.pop_back();
    while (!out.g_part.empty() && out.g_part.back()[0] == 0.0 && out.g_part.back()[1] == 0.0)
        out.g_part.pop_back();
    return out;
}

SliceCoeff eval_slice_series(const std::vector<SliceCoeff>& coeffs, double zx, double zy) {
    SliceCoeff acc{0.0, 0.0};
    for (size_t n = coeffs.size(); n-- > 0;) {
        double re = zx * acc[0] - zy * acc[1] + coeffs[n][0];
        double im = zx * acc[1] + zy * acc[0] + coeffs[n][1];
        acc = {re, im};
    }
    return acc;
}

}  // namespace srk
