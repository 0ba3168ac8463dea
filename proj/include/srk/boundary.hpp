#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "srk/quotient.hpp"

namespace srk {

// |p - q|^2 < k (1 - |q|^2): open ball internally tangent to the unit sphere
// at p, center p/(1+k), radius k/(1+k).
struct Orisphere {
    Quaternion p;
    double k;
};

// |q - xi| < k (1 - |q|) with k > 1: non-tangential approach region at xi.
struct Stolz {
    Quaternion xi;
    double k;
};

// Re(q) > gamma |q|: approach cone to infinity in the right half-space.
struct Cone {
    double gamma;
};

using ApproachRegion = std::variant<Orisphere, Stolz, Cone>;

bool region_contains(const ApproachRegion& r, Quaternion q);

// n strictly inside the region, deterministically from the seed. Stolz
// samples accumulate at xi along rays in its slice plane.
std::vector<Quaternion> sample_region(const ApproachRegion& r, int n, uint64_t seed);

struct LimitConfig {
    int k_min = 4;           // radial ladder r_k = 1 - 2^{-k}
    int k_max = 36;          // hard cap 45 (beyond that 1 - r underflows usefully)
    int fit_points = 8;      // linear extrapolation window
    double tolerance = 1e-4;
    int n_rays = 7;
    double diverge_threshold = 1e6;
    double inequality_slack = 1e-9;
    double algebraic_slack = 1e-12;
    double singular_tolerance = 1e-10;
    int expansion_terms = kExpansionTerms;
    double working_radius = kWorkingRadius;

    void validate() const;
    QuotientOptions quotient_options() const {
        return {singular_tolerance, expansion_terms, working_radius};
    }
};

struct MarginEntry {
    std::string name;
    double margin;
    double slack;
    bool pass() const { return margin >= -slack; }
};

// One theorem check: named margins (pass when margin >= -slack), estimates,
// and enough context to re-run. Serialization is deterministic: identical
// seeds and configs give byte-identical documents.
struct BoundaryReport {
    std::string theorem;
    std::vector<std::pair<std::string, std::string>> params;     // pre-encoded
    std::vector<std::pair<std::string, std::string>> estimates;  // pre-encoded
    std::vector<MarginEntry> margins;
    std::vector<std::string> notes;
    long long samples = 0;
    uint64_t seed = 0;
    LimitConfig config;

    void add_param(const std::string& name, const std::string& encoded);
    void add_scalar(const std::string& name, double v);
    void add_quat(const std::string& name, Quaternion q);
    void add_margin(const std::string& name, double margin, double slack);

    double min_margin() const;
    bool verdict() const;
    std::string to_json() const;
};

struct AlphaEstimate {
    double alpha;
    // Radial sequence was non-monotone beyond tolerance: the value is only
    // certified as a liminf lower bound.
    bool liminf_only;
};

// Radial Julia quotient (1 - |f(r xi)|)/(1 - r) extrapolated to r -> 1.
// Diverging when the sequence passes diverge_threshold (alpha = infinity);
// Inconsistent when the Aitken cross-check disagrees with the linear fit.
// PreconditionFailed when the seeded self-map spot-check fails.
AlphaEstimate estimate_alpha(const RegularMap& f, Quaternion xi,
                             const LimitConfig& cfg = {});

struct BoundaryLimit {
    Quaternion eta;        // radial limit of f
    Quaternion fprime;     // limit of (q - xi)^{-1} (f(q) - eta)
    double ray_spread;     // max deviation of the ray estimates from radial
};

// Radial limit plus difference-quotient limit, cross-checked along
// non-tangential rays in the slice plane of xi. Inconsistent when the ray
// spread exceeds 10x tolerance.
BoundaryLimit estimate_boundary_limit(const RegularMap& f, Quaternion xi,
                                      const LimitConfig& cfg = {});

// Julia inequality at (xi, alpha, eta). For xi = 1 uses the orisphere form
//   |eta - f(q)|^2/(1 - |f(q)|^2) <= alpha |1 - q|^2/(1 - |q|^2)
// plus the orisphere mapping S(1,k) -> S(eta, alpha k) for k in
// {1/2, 1, 2, 5}; for other xi the half-space form
//   Re((1 - f eta^-)^{-*}(1 + f eta^-)) >= (1/alpha) Re((1 - q xi^-)^{-*}(1 + q xi^-)).
BoundaryReport julia_check(const RegularMap& f, Quaternion xi, double alpha,
                           Quaternion eta, int nsamples, uint64_t seed,
                           const LimitConfig& cfg = {});

enum class Space { ball, halfspace };

// Margin of the Schwarz-Pick inequality at one pair: RHS - LHS where both
// sides are regular quotients evaluated through their own transforms.
// Ball:      |(1 - f conj(f(q0)))^{-*}(f - f(q0))| <= |(1 - q conj(q0))^{-*}(q - q0)|
// Halfspace: |(f + conj(f(q0)))^{-*}(f - f(q0))|   <= |(q + conj(q0))^{-*}(q - q0)|
double schwarz_pick_check(const RegularMap& f, Quaternion q0, Quaternion q,
                          Space space, double singular_tol = kSingularTolerance);

// Interior growth bounds through the value at 0 (four inequality families;
// the power-vanishing family engages when the leading coefficients vanish).
BoundaryReport lindelof_check(const RegularMap& f, Quaternion q,
                              const LimitConfig& cfg = {});

BoundaryReport lindelof_report(const RegularMap& f, int nsamples, uint64_t seed,
                               const LimitConfig& cfg = {});

// Hopf lemma at 1 for self-maps with boundary value 1: f'(1) is real and
//   f'(1) >= 2|1 - f(0)|^2 / (1 - |f(0)|^2 + |f'(0)|) >= |1 - f(0)|^2/(1 - |f(0)|^2),
// and when the first n coefficients vanish
//   f'(1) >= n + (n! - |f^(n)(0)|)/(n! + |f^(n)(0)|).
BoundaryReport hopf_report(const RegularMap& f, uint64_t seed = 0,
                           const LimitConfig& cfg = {});

// Boundary Schwarz lemma at a boundary-unimodular point xi:
//   lambda = conj(xi)(f(xi) conj(f'(xi)) + [conj(xi), f(xi) conj(A2)])
// is real and >= (1 - |f(0)|)/(1 + |f(0)|); when f fixes xi and 0, the
// bracket-corrected derivative f'(xi) - [xi, A2] exceeds 1.
BoundaryReport boundary_schwarz_report(const RegularMap& f, Quaternion xi,
                                       const LimitConfig& cfg = {});

// Julia-Caratheodory chain at xi: alpha, eta, f'(xi). Asserted only at
// xi = +-1 (f'(xi) = alpha conj(xi) eta and the Stolz-sampled quotient
// approaches alpha); elsewhere the quantities are reported, not asserted.
BoundaryReport jc_ball_report(const RegularMap& f, Quaternion xi, uint64_t seed = 0,
                              const LimitConfig& cfg = {});

// Half-space Julia-Caratheodory: c = inf Re f/Re q over the half-space;
// Re f(q) >= c Re q, and q^{-1}f(q), Re f/Re q, f'(q) all tend to c in the
// cone Re q > gamma|q| as |q| -> infinity.
BoundaryReport halfspace_jc_report(const RegularMap& f, double gamma,
                                   uint64_t seed = 0, const LimitConfig& cfg = {});

// Least-squares slope of log|f| against log|q - xi| along the radius toward
// xi: the vanishing order of f at xi. AllZero when f vanishes identically on
// the samples; PreconditionFailed when f leaves the closed right half-space.
double vanishing_order(const RegularMap& f, Quaternion xi,
                       const LimitConfig& cfg = {});

// Wraps vanishing_order at xi (default -1): maps into the closed right
// half-space can vanish at xi to order at most 1 unless identically zero.
BoundaryReport burns_krantz_report(const RegularMap& f, Quaternion xi,
                                   const LimitConfig& cfg = {});

}  // namespace srk
