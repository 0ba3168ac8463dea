#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <vector>

#include "srk/quaternion.hpp"

namespace srk {

// f(q) = sum_n q^n a_n with right coefficients a_n. Trailing exact-zero
// coefficients are trimmed so the degree is canonical; the zero function has
// an empty coefficient list. declared radius limits evaluation (default
// infinite: polynomials are entire).
struct RegularPoly {
    std::vector<Quaternion> coeffs;
    double radius = std::numeric_limits<double>::infinity();

    RegularPoly() = default;
    explicit RegularPoly(std::vector<Quaternion> c,
                         double r = std::numeric_limits<double>::infinity())
        : coeffs(std::move(c)), radius(r) {
        trim();
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == Quaternion::zero()) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }

    // -1 for the zero function.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Quaternion coeff(size_t n) const {
        return n < coeffs.size() ? coeffs[n] : Quaternion::zero();
    }
};

// Left-Horner: a0 + q*(a1 + q*(a2 + ...)). OutOfDomain outside the declared radius.
Quaternion eval_poly(const RegularPoly& f, Quaternion q);

// Coefficient convolution c_n = sum_k a_k b_{n-k}; the *-product.
RegularPoly star_product(const RegularPoly& f, const RegularPoly& g);

// f^c: conjugated coefficients.
RegularPoly regular_conjugate(const RegularPoly& f);

// f^s = f * f^c = f^c * f; real coefficients.
RegularPoly symmetrization(const RegularPoly& f);

// Termwise derivative: coefficient n of f' is (n+1) a_{n+1}.
RegularPoly slice_derivative(const RegularPoly& f);

RegularPoly poly_add(const RegularPoly& f, const RegularPoly& g);
RegularPoly poly_sub(const RegularPoly& f, const RegularPoly& g);

// f * c for a constant c: right-multiplies every coefficient.
RegularPoly right_multiply(const RegularPoly& f, Quaternion c);

// q^k * f (monomials are central: equals f * q^k).
RegularPoly monomial_multiply(const RegularPoly& f, int k);

RegularPoly scale(const RegularPoly& f, double s);

// Coefficient pairs along {1, I}: a value re + im*I on the slice.
using SliceCoeff = std::array<double, 2>;

// f restricted to the slice through I written as F(z) + G(z) J, where F, G
// have coefficients in the plane spanned by {1, I} and J is orthogonal to I.
struct SplitComponents {
    std::vector<SliceCoeff> f_part;
    std::vector<SliceCoeff> g_part;
};

// NotOrthogonal unless <I, J> vanishes (tolerance 1e-12).
SplitComponents split(const RegularPoly& f, UnitImaginary I, UnitImaginary J);

// Horner evaluation of a split component at z = zx + zy*I.
SliceCoeff eval_slice_series(const std::vector<SliceCoeff>& coeffs, double zx, double zy);

}  // namespace srk
