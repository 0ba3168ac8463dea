#include "srk/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "srk/format.hpp"
#include "srk/rng.hpp"

namespace srk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned char>(c));
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void require_unit(Quaternion xi, const char* what) {
    if (std::fabs(abs(xi) - 1.0) > 1e-9)
        raise(ErrorCode::invalid_parameter, std::string(what) + " must be unimodular");
}

// x values 2^{-k}, k = k_min..k_max. Exact in binary, so ladders are
// reproducible across platforms.
std::vector<double> ladder_steps(const LimitConfig& cfg) {
    std::vector<double> x;
    x.reserve(static_cast<size_t>(cfg.k_max - cfg.k_min + 1));
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) x.push_back(std::ldexp(1.0, -k));
    return x;
}

// Intercept at x = 0 of the least-squares line through the last m points
// (the tail holds the smallest x).
double fit_intercept(const std::vector<double>& x, const std::vector<double>& y, int m) {
    size_t n = x.size();
    size_t take = std::min<size_t>(static_cast<size_t>(std::max(m, 2)), n);
    size_t lo = n - take;
    double xb = 0, yb = 0;
    for (size_t i = lo; i < n; ++i) { xb += x[i]; yb += y[i]; }
    xb /= static_cast<double>(take);
    yb /= static_cast<double>(take);
    double sxx = 0, sxy = 0;
    for (size_t i = lo; i < n; ++i) {
        sxx += (x[i] - xb) * (x[i] - xb);
        sxy += (x[i] - xb) * (y[i] - yb);
    }
    if (sxx == 0.0) return yb;
    double slope = sxy / sxx;
    return yb - slope * xb;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y, int m) {
    size_t n = x.size();
    size_t take = std::min<size_t>(static_cast<size_t>(std::max(m, 2)), n);
    size_t lo = n - take;
    double xb = 0, yb = 0;
    for (size_t i = lo; i < n; ++i) { xb += x[i]; yb += y[i]; }
    xb /= static_cast<double>(take);
    yb /= static_cast<double>(take);
    double sxx = 0, sxy = 0;
    for (size_t i = lo; i < n; ++i) {
        sxx += (x[i] - xb) * (x[i] - xb);
        sxy += (x[i] - xb) * (y[i] - yb);
    }
    if (sxx == 0.0) return 0.0;
    return sxy / sxx;
}

// Aitken delta-squared acceleration at the middle of the ladder, where
// roundoff is still negligible. NaN when the second difference is too small
// to trust (already converged).
double aitken_mid(const std::vector<double>& y) {
    if (y.size() < 3) return kNan;
    size_t i = y.size() / 2;
    if (i + 1 >= y.size()) i = y.size() - 2;
    if (i < 1) i = 1;
    double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
    double denom = (y2 - y1) - (y1 - y0);
    double scale = std::fabs(y0) + std::fabs(y1) + std::fabs(y2) + 1.0;
    if (std::fabs(denom) < 1e-12 * scale) return kNan;
    return y0 - (y1 - y0) * (y1 - y0) / denom;
}

Quaternion extrapolate_quat(const std::vector<double>& x,
                            const std::vector<Quaternion>& v, int m) {
    std::vector<double> comp(v.size());
    Quaternion out;
    for (int c = 0; c < 4; ++c) {
        for (size_t i = 0; i < v.size(); ++i) {
            const Quaternion& q = v[i];
            comp[i] = c == 0 ? q.w : c == 1 ? q.x : c == 2 ? q.y : q.z;
        }
        double val = fit_intercept(x, comp, m);
        (c == 0 ? out.w : c == 1 ? out.x : c == 2 ? out.y : out.z) = val;
    }
    return out;
}

// Non-tangential ray directions v = e^{A theta} xi in the slice plane of xi.
std::vector<Quaternion> ray_directions(Quaternion xi, int n_rays) {
    Quaternion axis = slice_decompose(xi).axis.value();
    std::vector<Quaternion> dirs;
    dirs.reserve(static_cast<size_t>(n_rays));
    const double span = 3.0 * 3.14159265358979323846 / 8.0;
    for (int j = 0; j < n_rays; ++j) {
        double theta = n_rays == 1 ? 0.0
                                   : -span + 2.0 * span * j / (n_rays - 1);
        Quaternion rot{std::cos(theta), 0, 0, 0};
        dirs.push_back((rot + axis * std::sin(theta)) * xi);
    }
    return dirs;
}

void spot_check_ball_self_map(const RegularMap& f, const LimitConfig& cfg) {
    Rng rng(0x5e1fc3ec5eedULL);
    for (int i = 0; i < 64; ++i) {
        Quaternion q = rng.ball4(0.95);
        if (abs(eval_map(f, q, cfg.singular_tolerance)) > 1.0 + 1e-9)
            raise(ErrorCode::precondition_failed,
                  "map is not a self-map of the unit ball");
    }
}

// First coefficient index with modulus above the detection threshold;
// -1 when every coefficient is negligible.
int leading_index(const RegularPoly& series) {
    for (size_t i = 0; i < series.coeffs.size(); ++i)
        if (abs(series.coeffs[i]) > 1e-12) return static_cast<int>(i);
    return -1;
}

void append_config(std::string& o, const LimitConfig& c) {
    o += "{\"k_min\": " + fmt17(c.k_min) + ", \"k_max\": " + fmt17(c.k_max) +
         ", \"fit_points\": " + fmt17(c.fit_points) +
         ", \"tolerance\": " + fmt17(c.tolerance) +
         ", \"n_rays\": " + fmt17(c.n_rays) +
         ", \"diverge_threshold\": " + fmt17(c.diverge_threshold) +
         ", \"inequality_slack\": " + fmt17(c.inequality_slack) +
         ", \"algebraic_slack\": " + fmt17(c.algebraic_slack) +
         ", \"singular_tolerance\": " + fmt17(c.singular_tolerance) +
         ", \"expansion_terms\": " + fmt17(c.expansion_terms) +
         ", \"working_radius\": " + fmt17(c.working_radius) + "}";
}

}  // namespace

bool region_contains(const ApproachRegion& r, Quaternion q) {
    if (const Orisphere* o = std::get_if<Orisphere>(&r)) {
        Quaternion d = o->p - q;
        return norm_sq(d) < o->k * (1.0 - norm_sq(q));
    }
    if (const Stolz* s = std::get_if<Stolz>(&r)) {
        double aq = abs(q);
        return aq < 1.0 && abs(q - s->xi) < s->k * (1.0 - aq);
    }
    const Cone& c = std::get<Cone>(r);
    return q.w > c.gamma * abs(q);
}

std::vector<Quaternion> sample_region(const ApproachRegion& r, int n, uint64_t seed) {
    if (n < 0) raise(ErrorCode::invalid_parameter, "sample count must be nonnegative");
    Rng rng(seed);
    std::vector<Quaternion> out;
    out.reserve(static_cast<size_t>(n));
    if (const Orisphere* o = std::get_if<Orisphere>(&r)) {
        Quaternion center = o->p / (1.0 + o->k);
        double radius = o->k / (1.0 + o->k);
        while (static_cast<int>(out.size()) < n) {
            Quaternion q = center + rng.ball4(radius);
            if (region_contains(r, q)) out.push_back(q);
        }
        return out;
    }
    if (const Stolz* s = std::get_if<Stolz>(&r)) {
        if (!(s->k > 1.0))
            raise(ErrorCode::invalid_parameter, "Stolz aperture must exceed 1");
        require_unit(s->xi, "Stolz vertex");
        Quaternion axis = slice_decompose(s->xi).axis.value();
        double theta_max = std::acos(std::min(1.0, 1.0 / s->k)) * 0.95;
        while (static_cast<int>(out.size()) < n) {
            double delta = rng.log_uniform(1e-9, 0.25);
            double theta = rng.uniform(-theta_max, theta_max);
            Quaternion rot{std::cos(theta), 0, 0, 0};
            Quaternion v = (rot + axis * std::sin(theta)) * s->xi;
            Quaternion q = s->xi - v * delta;
            for (int t = 0; t < 60 && !region_contains(r, q); ++t) {
                delta *= 0.5;
                q = s->xi - v * delta;
            }
            if (region_contains(r, q)) out.push_back(q);
        }
        return out;
    }
    const Cone& c = std::get<Cone>(r);
    if (!(c.gamma > 0.0) || !(c.gamma < 1.0))
        raise(ErrorCode::invalid_parameter, "cone parameter must lie in (0, 1)");
    double phi_max = std::acos(c.gamma) * 0.98;
    while (static_cast<int>(out.size()) < n) {
        double t = rng.log_uniform(1.0, 1e6);
        double phi = rng.uniform(0.0, phi_max);
        Quaternion u = rng.unit_imaginary();
        Quaternion q = (Quaternion{std::cos(phi), 0, 0, 0} + u * std::sin(phi)) * t;
        if (region_contains(r, q)) out.push_back(q);
    }
    return out;
}

void LimitConfig::validate() const {
    if (k_min < 1) raise(ErrorCode::invalid_parameter, "k_min must be at least 1");
    if (k_max > 45) raise(ErrorCode::invalid_parameter, "k_max must not exceed 45");
    if (k_max - k_min + 1 < std::max(fit_points, 3))
        raise(ErrorCode::invalid_parameter, "radial ladder too short for the fit window");
    if (fit_points < 2) raise(ErrorCode::invalid_parameter, "fit window needs 2+ points");
    if (!(tolerance > 0)) raise(ErrorCode::invalid_parameter, "tolerance must be positive");
    if (n_rays < 1) raise(ErrorCode::invalid_parameter, "need at least one ray");
    if (!(diverge_threshold > 0))
        raise(ErrorCode::invalid_parameter, "divergence threshold must be positive");
    if (inequality_slack < 0 || algebraic_slack < 0)
        raise(ErrorCode::invalid_parameter, "slack must be nonnegative");
    if (!(singular_tolerance > 0))
        raise(ErrorCode::invalid_parameter, "singular tolerance must be positive");
    if (expansion_terms < 1)
        raise(ErrorCode::invalid_parameter, "expansion needs at least one term");
    if (!(working_radius > 1.0))
        raise(ErrorCode::invalid_parameter, "working radius must exceed 1");
}

void BoundaryReport::add_param(const std::string& name, const std::string& encoded) {
    params.emplace_back(name, encoded);
}

void BoundaryReport::add_scalar(const std::string& name, double v) {
    estimates.emplace_back(name, fmt17(v));
}

void BoundaryReport::add_quat(const std::string& name, Quaternion q) {
    estimates.emplace_back(name, "\"" + format_quaternion(q) + "\"");
}

void BoundaryReport::add_margin(const std::string& name, double margin, double slack) {
    margins.push_back({name, margin, slack});
}

double BoundaryReport::min_margin() const {
    double m = kInf;
    for (const auto& e : margins) m = std::min(m, e.margin);
    return margins.empty() ? 0.0 : m;
}

bool BoundaryReport::verdict() const {
    for (const auto& e : margins)
        if (!e.pass()) return false;
    return true;
}

std::string BoundaryReport::to_json() const {
    std::string o = "{\n";
    o += "  \"theorem\": \"" + json_escape(theorem) + "\",\n";
    o += "  \"params\": {";
    for (size_t i = 0; i < params.size(); ++i) {
        o += i ? ",\n    " : "\n    ";
        o += "\"" + json_escape(params[i].first) + "\": " + params[i].second;
    }
    o += params.empty() ? "},\n" : "\n  },\n";
    o += "  \"estimates\": {";
    for (size_t i = 0; i < estimates.size(); ++i) {
        o += i ? ",\n    " : "\n    ";
        o += "\"" + json_escape(estimates[i].first) + "\": " + estimates[i].second;
    }
    o += estimates.empty() ? "},\n" : "\n  },\n";
    o += "  \"margins\": [";
    for (size_t i = 0; i < margins.size(); ++i) {
        o += i ? ",\n    " : "\n    ";
        o += "{\"name\": \"" + json_escape(margins[i].name) +
             "\", \"margin\": " + fmt17(margins[i].margin) +
             ", \"slack\": " + fmt17(margins[i].slack) +
             ", \"pass\": " + (margins[i].pass() ? "true" : "false") + "}";
    }
    o += margins.empty() ? "],\n" : "\n  ],\n";
    o += "  \"min_margin\": " + fmt17(min_margin()) + ",\n";
    o += std::string("  \"verdict\": \"") + (verdict() ? "pass" : "fail") + "\",\n";
    o += "  \"notes\": [";
    for (size_t i = 0; i < notes.size(); ++i) {
        o += i ? ",\n    " : "\n    ";
        o += "\"" + json_escape(notes[i]) + "\"";
    }
    o += notes.empty() ? "],\n" : "\n  ],\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", samples);
    o += std::string("  \"samples\": ") + buf + ",\n";
    std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(seed));
    o += std::string("  \"seed\": ") + buf + ",\n";
    o += "  \"config\": ";
    append_config(o, config);
    o += "\n}\n";
    return o;
}

AlphaEstimate estimate_alpha(const RegularMap& f, Quaternion xi,
                             const LimitConfig& cfg) {
    cfg.validate();
    require_unit(xi, "boundary point");
    spot_check_ball_self_map(f, cfg);
    std::vector<double> xs = ladder_steps(cfg);
    std::vector<double> ys;
    ys.reserve(xs.size());
    for (double step : xs) {
        Quaternion q = xi * (1.0 - step);
        double y = (1.0 - abs(eval_map(f, q, cfg.singular_tolerance))) / step;
        if (!(y < cfg.diverge_threshold))
            raise(ErrorCode::diverging,
                  "Julia quotient exceeds the divergence threshold");
        ys.push_back(y);
    }
    bool rise = false, fall = false;
    size_t tail = std::min<size_t>(static_cast<size_t>(cfg.fit_points), ys.size());
    for (size_t i = ys.size() - tail; i + 1 < ys.size(); ++i) {
        double d = ys[i + 1] - ys[i];
        rise = rise || d > cfg.tolerance;
        fall = fall || d < -cfg.tolerance;
    }
    double alpha = fit_intercept(xs, ys, cfg.fit_points);
    double accel = aitken_mid(ys);
    if (std::isfinite(accel) && std::fabs(accel - alpha) > 10.0 * cfg.tolerance)
        raise(ErrorCode::inconsistent,
              "acceleration cross-check disagrees with the radial fit");
    return {alpha, rise && fall};
}

BoundaryLimit estimate_boundary_limit(const RegularMap& f, Quaternion xi,
                                      const LimitConfig& cfg) {
    cfg.validate();
    require_unit(xi, "boundary point");
    std::vector<double> xs = ladder_steps(cfg);
    std::vector<Quaternion> fv(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        fv[i] = eval_map(f, xi * (1.0 - xs[i]), cfg.singular_tolerance);
    Quaternion eta = extrapolate_quat(xs, fv, cfg.fit_points);

    std::vector<Quaternion> dq(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        dq[i] = conj(xi) * (fv[i] - eta) * (-1.0 / xs[i]);
    Quaternion fprime = extrapolate_quat(xs, dq, cfg.fit_points);

    double spread = 0.0;
    for (const Quaternion& v : ray_directions(xi, cfg.n_rays)) {
        std::vector<Quaternion> rq(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
            Quaternion q = xi - v * xs[i];
            rq[i] = conj(v) * (eval_map(f, q, cfg.singular_tolerance) - eta) *
                    (-1.0 / xs[i]);
        }
        Quaternion limit = extrapolate_quat(xs, rq, cfg.fit_points);
        spread = std::max(spread, abs(limit - fprime));
    }
    if (spread > 10.0 * cfg.tolerance)
        raise(ErrorCode::inconsistent,
              "non-tangential difference quotients disagree with the radial limit");
    return {eta, fprime, spread};
}

BoundaryReport julia_check(const RegularMap& f, Quaternion xi, double alpha,
                           Quaternion eta, int nsamples, uint64_t seed,
                           const LimitConfig& cfg) {
    cfg.validate();
    require_unit(xi, "boundary point");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        raise(ErrorCode::invalid_parameter, "alpha must be positive and finite");
    if (nsamples < 1) raise(ErrorCode::invalid_parameter, "need at least one sample");

    BoundaryReport rep;
    rep.theorem = "julia";
    rep.seed = seed;
    rep.config = cfg;
    rep.add_param("xi", "\"" + format_quaternion(xi) + "\"");
    rep.add_param("alpha", fmt17(alpha));
    rep.add_param("eta", "\"" + format_quaternion(eta) + "\"");

    Rng rng(seed);
    long long total = 0;
    if (abs(xi - Quaternion::one()) < 1e-12) {
        double min_margin = kInf;
        for (int i = 0; i < nsamples; ++i) {
            Quaternion q = rng.ball4(0.95);
            Quaternion fq = eval_map(f, q, cfg.singular_tolerance);
            double lhs = norm_sq(eta - fq) / (1.0 - norm_sq(fq));
            double rhs = alpha * norm_sq(Quaternion::one() - q) / (1.0 - norm_sq(q));
            min_margin = std::min(min_margin, rhs - lhs);
            ++total;
        }
        rep.add_margin("julia_pointwise", min_margin, cfg.inequality_slack);
        const double ks[4] = {0.5, 1.0, 2.0, 5.0};
        const char* names[4] = {"orisphere_0.5", "orisphere_1", "orisphere_2",
                                "orisphere_5"};
        for (int t = 0; t < 4; ++t) {
            double k = ks[t];
            Quaternion center{1.0 / (1.0 + k), 0, 0, 0};
            double radius = k / (1.0 + k);
            double m = kInf;
            for (int i = 0; i < nsamples; ++i) {
                Quaternion q = center + rng.ball4(radius * 0.9999);
                Quaternion fq = eval_map(f, q, cfg.singular_tolerance);
                m = std::min(m, alpha * k * (1.0 - norm_sq(fq)) - norm_sq(eta - fq));
                ++total;
            }
            rep.add_margin(names[t], m, cfg.inequality_slack);
        }
    } else {
        // General boundary point: the half-space form of the inequality,
        // with both sides evaluated as regular quotients.
        RegularMap ff = f.folded();
        RegularPoly d = ff.is_poly() ? RegularPoly({Quaternion::one()})
                                     : ff.quotient().den;
        RegularPoly n = ff.is_poly() ? ff.poly() : ff.quotient().num;
        RegularPoly ne = right_multiply(n, conj(eta));
        RegularQuotient lhs_q{poly_sub(d, ne), poly_add(d, ne)};
        RegularQuotient rhs_q{RegularPoly({Quaternion::one(), -conj(xi)}),
                              RegularPoly({Quaternion::one(), conj(xi)})};
        double min_margin = kInf;
        for (int i = 0; i < nsamples; ++i) {
            Quaternion q = rng.ball4(0.95);
            double lhs = eval_quotient(lhs_q, q, cfg.singular_tolerance).w;
            double rhs = eval_quotient(rhs_q, q, cfg.singular_tolerance).w;
            min_margin = std::min(min_margin, lhs - rhs / alpha);
            ++total;
        }
        rep.add_margin("julia_halfspace_form", min_margin, cfg.inequality_slack);
    }
    rep.samples = total;
    return rep;
}

double schwarz_pick_check(const RegularMap& f, Quaternion q0, Quaternion q,
                          Space space, double singular_tol) {
    RegularMap ff = f.folded();
    RegularPoly d = ff.is_poly() ? RegularPoly({Quaternion::one()}) : ff.quotient().den;
    RegularPoly n = ff.is_poly() ? ff.poly() : ff.quotient().num;
    Quaternion c = eval_map(ff, q0, singular_tol);
    RegularPoly lden, lnum, rden, rnum;
    if (space == Space::ball) {
        lden = poly_sub(d, right_multiply(n, conj(c)));
        lnum = poly_sub(n, right_multiply(d, c));
        rden = RegularPoly({Quaternion::one(), -conj(q0)});
        rnum = RegularPoly({-q0, Quaternion::one()});
    } else {
        lden = poly_add(n, right_multiply(d, conj(c)));
        lnum = poly_sub(n, right_multiply(d, c));
        rden = RegularPoly({conj(q0), Quaternion::one()});
        rnum = RegularPoly({-q0, Quaternion::one()});
    }
    double lhs = abs(eval_quotient({lden, lnum}, q, singular_tol));
    double rhs = abs(eval_quotient({rden, rnum}, q, singular_tol));
    return rhs - lhs;
}

namespace {

// Shared state for the interior growth bounds: value at 0 plus the leading
// vanishing order read off the expansion.
struct GrowthData {
    Quaternion f0;
    double af0;
    int n = -1;       // first non-negligible coefficient index
    double an = 0.0;  // its modulus
    bool zero_map = false;
    RegularPoly series;
};

GrowthData growth_data(const RegularMap& f, const LimitConfig& cfg) {
    GrowthData g;
    g.f0 = eval_map(f, Quaternion::zero(), cfg.singular_tolerance);
    g.af0 = abs(g.f0);
    g.series = expand_map(f, cfg.expansion_terms, cfg.working_radius,
                          cfg.singular_tolerance);
    g.n = leading_index(g.series);
    if (g.n < 0) {
        g.zero_map = true;
    } else {
        g.an = abs(g.series.coeffs[static_cast<size_t>(g.n)]);
    }
    return g;
}

struct GrowthMargins {
    double disc_image;
    double modulus_upper;
    double modulus_lower;
    double increment;
    double power_upper = kInf;
    double power_lower = kInf;
    bool power_engaged = false;
};

GrowthMargins growth_margins(const RegularMap& f, const GrowthData& g, Quaternion q,
                             const LimitConfig& cfg) {
    double r = abs(q);
    if (!(r < 1.0)) raise(ErrorCode::out_of_domain, "sample must lie in the unit ball");
    Quaternion fq = eval_map(f, q, cfg.singular_tolerance);
    double afq = abs(fq);
    double den20 = 1.0 - r * r * g.af0 * g.af0;
    Quaternion center = g.f0 * ((1.0 - r * r) / den20);
    double rhs20 = r * (1.0 - g.af0 * g.af0) / den20;
    GrowthMargins m{};
    m.disc_image = rhs20 - abs(fq - center);
    m.modulus_upper = (r + g.af0) / (1.0 + r * g.af0) - afq;
    m.modulus_lower = afq - (g.af0 - r) / (1.0 - r * g.af0);
    m.increment = r * (1.0 - g.af0 * g.af0) / (1.0 - r * g.af0) - abs(fq - g.f0);
    if (g.n >= 1) {
        m.power_engaged = true;
        double pw = std::pow(r, g.n);
        m.power_upper = (r + g.an) / (1.0 + r * g.an) * pw - afq;
        m.power_lower = afq - (g.an - r) / (1.0 - r * g.an) * pw;
    }
    return m;
}

void add_growth_margins(BoundaryReport& rep, const GrowthMargins& m,
                        const LimitConfig& cfg) {
    rep.add_margin("disc_image", m.disc_image, cfg.inequality_slack);
    rep.add_margin("modulus_upper", m.modulus_upper, cfg.inequality_slack);
    rep.add_margin("modulus_lower", m.modulus_lower, cfg.inequality_slack);
    rep.add_margin("increment", m.increment, cfg.inequality_slack);
    if (m.power_engaged) {
        rep.add_margin("power_upper", m.power_upper, cfg.inequality_slack);
        rep.add_margin("power_lower", m.power_lower, cfg.inequality_slack);
    }
}

}  // namespace

BoundaryReport lindelof_check(const RegularMap& f, Quaternion q,
                              const LimitConfig& cfg) {
    cfg.validate();
    BoundaryReport rep;
    rep.theorem = "lindelof";
    rep.config = cfg;
    rep.add_param("q", "\"" + format_quaternion(q) + "\"");
    GrowthData g = growth_data(f, cfg);
    rep.add_quat("f0", g.f0);
    if (g.zero_map) rep.notes.push_back("all coefficients vanish; power family skipped");
    if (g.n >= 1) rep.add_scalar("vanishing_order", g.n);
    GrowthMargins m = growth_margins(f, g, q, cfg);
    add_growth_margins(rep, m, cfg);
    rep.samples = 1;
    return rep;
}

BoundaryReport lindelof_report(const RegularMap& f, int nsamples, uint64_t seed,
                               const LimitConfig& cfg) {
    cfg.validate();
    if (nsamples < 1) raise(ErrorCode::invalid_parameter, "need at least one sample");
    BoundaryReport rep;
    rep.theorem = "lindelof";
    rep.seed = seed;
    rep.config = cfg;
    GrowthData g = growth_data(f, cfg);
    rep.add_quat("f0", g.f0);
    if (g.zero_map) rep.notes.push_back("all coefficients vanish; power family skipped");
    if (g.n >= 1) rep.add_scalar("vanishing_order", g.n);
    Rng rng(seed);
    GrowthMargins acc{};
    acc.disc_image = acc.modulus_upper = acc.modulus_lower = acc.increment = kInf;
    for (int i = 0; i < nsamples; ++i) {
        GrowthMargins m = growth_margins(f, g, rng.ball4(0.97), cfg);
        acc.disc_image = std::min(acc.disc_image, m.disc_image);
        acc.modulus_upper = std::min(acc.modulus_upper, m.modulus_upper);
        acc.modulus_lower = std::min(acc.modulus_lower, m.modulus_lower);
        acc.increment = std::min(acc.increment, m.increment);
        acc.power_upper = std::min(acc.power_upper, m.power_upper);
        acc.power_lower = std::min(acc.power_lower, m.power_lower);
        acc.power_engaged = m.power_engaged;
    }
    add_growth_margins(rep, acc, cfg);
    rep.samples = nsamples;
    return rep;
}

BoundaryReport hopf_report(const RegularMap& f, uint64_t seed,
                           const LimitConfig& cfg) {
    cfg.validate();
    BoundaryReport rep;
    rep.theorem = "hopf";
    rep.seed = seed;
    rep.config = cfg;
    BoundaryLimit bl = estimate_boundary_limit(f, Quaternion::one(), cfg);
    if (abs(bl.eta - Quaternion::one()) > std::max(1e-6, 10.0 * cfg.tolerance))
        raise(ErrorCode::precondition_failed, "boundary value at 1 is not 1");
    rep.add_quat("eta", bl.eta);
    rep.add_quat("fprime", bl.fprime);
    rep.add_scalar("ray_spread", bl.ray_spread);
    double est_slack = 10.0 * cfg.tolerance;
    rep.add_margin("derivative_real", est_slack - abs_imag(bl.fprime), 0.0);
    double fp1 = bl.fprime.w;

    GrowthData g = growth_data(f, cfg);
    double a1 = abs(g.series.coeff(1));  // |f'(0)|
    rep.add_quat("f0", g.f0);
    rep.add_scalar("fprime0_abs", a1);
    double num = norm_sq(Quaternion::one() - g.f0);
    double strong = 2.0 * num / (1.0 - g.af0 * g.af0 + a1);
    double weak = num / (1.0 - g.af0 * g.af0);
    rep.add_margin("lower_bound_strong", fp1 - strong, est_slack);
    rep.add_margin("lower_bound_weak", fp1 - weak, est_slack);
    if (g.n >= 1) {
        double bound = g.n + (1.0 - g.an) / (1.0 + g.an);
        rep.add_scalar("vanishing_order", g.n);
        rep.add_margin("vanishing_bound", fp1 - bound, est_slack);
        bool monomial = std::fabs(g.an - 1.0) <= 1e-12;
        if (monomial) {
            int nz = 0;
            for (const Quaternion& c : g.series.coeffs)
                if (abs(c) > 1e-12) ++nz;
            monomial = nz == 1;
        }
        if (monomial)
            rep.notes.push_back("extremal monomial: equality attained at the order");
        else
            rep.notes.push_back("derivative exceeds the vanishing order strictly (gap " +
                                fmt17(fp1 - g.n) + ")");
    }
    rep.samples = (cfg.k_max - cfg.k_min + 1) * (1 + cfg.n_rays);
    return rep;
}

BoundaryReport boundary_schwarz_report(const RegularMap& f, Quaternion xi,
                                       const LimitConfig& cfg) {
    cfg.validate();
    require_unit(xi, "boundary point");
    BoundaryReport rep;
    rep.theorem = "boundary_schwarz";
    rep.config = cfg;
    rep.add_param("xi", "\"" + format_quaternion(xi) + "\"");

    Quaternion fxi = eval_map(f, xi, cfg.singular_tolerance);
    if (std::fabs(abs(fxi) - 1.0) > 1e-9)
        raise(ErrorCode::not_boundary_unimodular,
              "map is not unimodular at the boundary point");
    SphericalCoeffs sc = spherical_coeffs(f, xi, cfg.quotient_options());
    Quaternion fprime = sc.a1 + (2.0 * imag_part(xi)) * sc.a2;
    Quaternion lambda_q =
        conj(xi) * (fxi * conj(fprime) + lie_bracket(conj(xi), fxi * conj(sc.a2)));
    Quaternion f0 = eval_map(f, Quaternion::zero(), cfg.singular_tolerance);

    rep.add_quat("f_xi", fxi);
    rep.add_quat("fprime_xi", fprime);
    rep.add_quat("a1", sc.a1);
    rep.add_quat("a2", sc.a2);
    rep.add_quat("lambda", lambda_q);
    rep.add_quat("f0", f0);
    rep.add_margin("lambda_real", 1e-9 - abs_imag(lambda_q), 0.0);
    double lam = lambda_q.w;
    double bound = (1.0 - abs(f0)) / (1.0 + abs(f0));
    rep.add_margin("lambda_lower", lam - bound, cfg.inequality_slack);

    RegularPoly series = expand_map(f, cfg.expansion_terms, cfg.working_radius,
                                    cfg.singular_tolerance);
    int n = leading_index(series);
    if (n >= 1) {
        double an = abs(series.coeffs[static_cast<size_t>(n)]);
        rep.add_scalar("vanishing_order", n);
        rep.add_margin("vanishing_lower", lam - (n + (1.0 - an) / (1.0 + an)),
                       cfg.inequality_slack);
    }
    if (abs(f0) <= 1e-12 && abs(fxi - xi) <= 1e-9) {
        Quaternion corrected = fprime - lie_bracket(xi, sc.a2);
        rep.add_quat("corrected_derivative", corrected);
        rep.add_margin("fixed_point_excess", corrected.w - 1.0, cfg.inequality_slack);
    }
    if (!f.is_poly())
        rep.notes.push_back(
            "expansion through the boundary point requires the denominator "
            "symmetrization to be zero-free up to the working radius; this was "
            "checked by sampling, not proven");
    rep.samples = 1;
    return rep;
}

BoundaryReport jc_ball_report(const RegularMap& f, Quaternion xi, uint64_t seed,
                              const LimitConfig& cfg) {
    cfg.validate();
    require_unit(xi, "boundary point");
    BoundaryReport rep;
    rep.theorem = "jc_ball";
    rep.seed = seed;
    rep.config = cfg;
    rep.add_param("xi", "\"" + format_quaternion(xi) + "\"");

    AlphaEstimate ae = estimate_alpha(f, xi, cfg);
    BoundaryLimit bl = estimate_boundary_limit(f, xi, cfg);
    rep.add_scalar("alpha", ae.alpha);
    rep.add_quat("eta", bl.eta);
    rep.add_quat("fprime", bl.fprime);
    rep.add_scalar("ray_spread", bl.ray_spread);
    if (ae.liminf_only)
        rep.notes.push_back("radial sequence non-monotone: alpha is a liminf lower bound");

    std::vector<double> xs = ladder_steps(cfg);
    RegularMap dmap = map_derivative(f);
    std::vector<Quaternion> dv(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        dv[i] = eval_map(dmap, xi * (1.0 - xs[i]), cfg.singular_tolerance);
    Quaternion fprime_direct = extrapolate_quat(xs, dv, cfg.fit_points);
    rep.add_quat("fprime_direct", fprime_direct);

    bool real_xi = abs(xi - Quaternion::one()) < 1e-12 ||
                   abs(xi + Quaternion::one()) < 1e-12;
    if (real_xi) {
        double tol = 10.0 * cfg.tolerance;
        rep.add_margin("difference_vs_derivative",
                       tol - abs(bl.fprime - fprime_direct), 0.0);
        rep.add_margin("derivative_identity",
                       tol - abs(bl.fprime - conj(xi) * bl.eta * ae.alpha), 0.0);
        double worst = 0.0;
        for (const Quaternion& v : ray_directions(xi, cfg.n_rays)) {
            std::vector<double> ys(xs.size());
            for (size_t i = 0; i < xs.size(); ++i) {
                Quaternion q = xi - v * xs[i];
                ys[i] = (1.0 - abs(eval_map(f, q, cfg.singular_tolerance))) /
                        (1.0 - abs(q));
            }
            worst = std::max(worst,
                             std::fabs(fit_intercept(xs, ys, cfg.fit_points) - ae.alpha));
        }
        rep.add_margin("stolz_quotient", tol * (1.0 + std::fabs(ae.alpha)) - worst, 0.0);
    } else {
        rep.notes.push_back(
            "derivative relation asserted only at the real boundary points; "
            "quantities at this point are reported unasserted");
    }
    rep.samples = (cfg.k_max - cfg.k_min + 1) * (2 + 2 * cfg.n_rays);
    return rep;
}

BoundaryReport halfspace_jc_report(const RegularMap& f, double gamma,
                                   uint64_t seed, const LimitConfig& cfg) {
    cfg.validate();
    if (!(gamma > 0.0) || !(gamma < 1.0))
        raise(ErrorCode::invalid_parameter, "cone parameter must lie in (0, 1)");
    BoundaryReport rep;
    rep.theorem = "jc_halfspace";
    rep.seed = seed;
    rep.config = cfg;
    rep.add_param("gamma", fmt17(gamma));

    Rng rng(seed);
    const int wide = 4096;
    double c_min = kInf;
    double max_ref = 0.0;
    std::vector<Quaternion> pts(wide);
    for (int i = 0; i < wide; ++i) {
        double re = rng.log_uniform(1e-3, 1e4);
        double im = rng.log_uniform(1e-6, 1e4);
        Quaternion q = Quaternion{re, 0, 0, 0} + rng.unit_imaginary() * im;
        pts[static_cast<size_t>(i)] = q;
        Quaternion fq = eval_map(f, q, cfg.singular_tolerance);
        c_min = std::min(c_min, fq.w / re);
        max_ref = std::max(max_ref, std::fabs(fq.w));
    }

    // Cone ladders: rays t (cos phi + U sin phi), t = 2^m. The top of the
    // ladder is capped so that the derivative quotient cannot overflow.
    const double phis[4] = {0.0, std::acos(gamma) * 0.3, std::acos(gamma) * 0.6,
                            std::acos(gamma) * 0.9};
    const Quaternion us[2] = {Quaternion::i(),
                              Quaternion{0, 0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}};
    std::vector<double> ts, inv_ts;
    for (int m = 8; m <= 28; ++m) {
        ts.push_back(std::ldexp(1.0, m));
        inv_ts.push_back(std::ldexp(1.0, -m));
    }
    RegularMap dmap = map_derivative(f);
    std::vector<Quaternion> ratio_lims, deriv_lims;
    std::vector<double> re_lims;
    long long total = wide;
    for (const Quaternion& u : us) {
        for (double phi : phis) {
            Quaternion dir = Quaternion{std::cos(phi), 0, 0, 0} + u * std::sin(phi);
            std::vector<Quaternion> l1(ts.size()), l3(ts.size());
            std::vector<double> l2(ts.size());
            for (size_t i = 0; i < ts.size(); ++i) {
                Quaternion q = dir * ts[i];
                Quaternion fq = eval_map(f, q, cfg.singular_tolerance);
                l1[i] = inverse(q) * fq;
                l2[i] = fq.w / q.w;
                l3[i] = eval_map(dmap, q, cfg.singular_tolerance);
                ++total;
            }
            ratio_lims.push_back(extrapolate_quat(inv_ts, l1, cfg.fit_points));
            re_lims.push_back(fit_intercept(inv_ts, l2, cfg.fit_points));
            deriv_lims.push_back(extrapolate_quat(inv_ts, l3, cfg.fit_points));
            c_min = std::min(c_min, re_lims.back());
        }
    }
    double c = c_min;
    Quaternion cq{c, 0, 0, 0};
    double worst_ratio = 0.0, worst_re = 0.0, worst_deriv = 0.0;
    for (size_t i = 0; i < re_lims.size(); ++i) {
        worst_ratio = std::max(worst_ratio, abs(ratio_lims[i] - cq));
        worst_re = std::max(worst_re, std::fabs(re_lims[i] - c));
        worst_deriv = std::max(worst_deriv, abs(deriv_lims[i] - cq));
    }
    rep.add_scalar("c", c);
    rep.add_quat("ratio_limit", ratio_lims.front());
    rep.add_scalar("re_ratio_limit", re_lims.front());
    rep.add_quat("derivative_limit", deriv_lims.front());

    double tol = 10.0 * cfg.tolerance * (1.0 + std::fabs(c));
    rep.add_margin("ratio_limit", tol - worst_ratio, 0.0);
    rep.add_margin("re_ratio_limit", tol - worst_re, 0.0);
    rep.add_margin("derivative_limit", tol - worst_deriv, 0.0);

    double lower = kInf;
    for (const Quaternion& q : pts)
        lower = std::min(lower, eval_map(f, q, cfg.singular_tolerance).w - c * q.w);
    rep.add_margin("lower_bound", lower,
                   cfg.inequality_slack * (1.0 + max_ref) + 10.0 * cfg.tolerance);
    rep.samples = total;
    return rep;
}

double vanishing_order(const RegularMap& f, Quaternion xi, const LimitConfig& cfg) {
    cfg.validate();
    require_unit(xi, "boundary point");
    Rng rng(0xb41f5eedULL);
    for (int i = 0; i < 1024; ++i) {
        Quaternion v = eval_map(f, rng.ball4(0.999), cfg.singular_tolerance);
        if (v.w < -1e-9 * (1.0 + abs(v)))
            raise(ErrorCode::precondition_failed,
                  "map leaves the closed right half-space");
    }
    std::vector<double> xs = ladder_steps(cfg);
    std::vector<double> lx(xs.size()), ly(xs.size());
    bool any = false;
    for (size_t i = 0; i < xs.size(); ++i) {
        double a = abs(eval_map(f, xi * (1.0 - xs[i]), cfg.singular_tolerance));
        any = any || a >= 1e-280;
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(std::max(a, 1e-300));
    }
    if (!any) raise(ErrorCode::all_zero, "map vanishes on every approach sample");
    return fit_slope(lx, ly, cfg.fit_points);
}

BoundaryReport burns_krantz_report(const RegularMap& f, Quaternion xi,
                                   const LimitConfig& cfg) {
    cfg.validate();
    BoundaryReport rep;
    rep.theorem = "burns_krantz";
    rep.config = cfg;
    rep.add_param("xi", "\"" + format_quaternion(xi) + "\"");
    try {
        double order = vanishing_order(f, xi, cfg);
        rep.add_scalar("order", order);
        rep.add_margin("order_rigidity", 1.0 + 1e-2 - order, 0.0);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::all_zero) throw;
        rep.add_param("order", "\"infinite\"");
        rep.notes.push_back("map vanishes identically along the approach");
        rep.add_margin("order_rigidity", 0.0, 0.0);
    }
    rep.samples = (cfg.k_max - cfg.k_min + 1) + 1024;
    return rep;
}

}  // namespace srk
