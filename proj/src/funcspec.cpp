#include "srk/funcspec.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "srk/format.hpp"
#include "srk/rng.hpp"

namespace srk {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& msg) {
    raise(ErrorCode::parse_error, msg);
}

[[noreturn]] void validation_fail(const std::string& msg) {
    raise(ErrorCode::validation_error, msg);
}

std::pair<int, int> line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Quaternion quat_at(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 4)
        parse_fail(path + ": expected a quaternion [w, x, y, z]");
    for (const auto& c : j)
        if (!c.is_number()) parse_fail(path + ": expected numeric components");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
            j[3].get<double>()};
}

double num_at(const json& j, const std::string& path) {
    if (!j.is_number()) parse_fail(path + ": expected a number");
    return j.get<double>();
}

RegularPoly poly_at(const json& j, const std::string& path) {
    if (!j.is_object()) parse_fail(path + ": expected a poly object");
    if (j.contains("kind") && j["kind"] != "poly")
        parse_fail(path + ".kind: expected \"poly\"");
    if (!j.contains("coeffs")) parse_fail(path + ".coeffs: missing");
    const json& cs = j["coeffs"];
    if (!cs.is_array()) parse_fail(path + ".coeffs: expected an array");
    std::vector<Quaternion> coeffs;
    coeffs.reserve(cs.size());
    for (size_t i = 0; i < cs.size(); ++i)
        coeffs.push_back(quat_at(cs[i], path + ".coeffs[" + std::to_string(i) + "]"));
    double radius = std::numeric_limits<double>::infinity();
    if (j.contains("radius")) {
        radius = num_at(j["radius"], path + ".radius");
        if (!(radius > 0.0)) validation_fail(path + ".radius: must be positive");
    }
    return RegularPoly(std::move(coeffs), radius);
}

RegularMap build(const json& j, const std::string& path);

RegularMap build_quotient(const json& j, const std::string& path) {
    if (!j.contains("den")) parse_fail(path + ".den: missing");
    if (!j.contains("num")) parse_fail(path + ".num: missing");
    RegularPoly den = poly_at(j["den"], path + ".den");
    RegularPoly num = poly_at(j["num"], path + ".num");
    if (den.is_zero()) validation_fail(path + ".den: identically zero");
    RegularQuotient q{std::move(den), std::move(num)};
    if (j.contains("right_const"))
        return RegularMap(std::move(q), quat_at(j["right_const"], path + ".right_const"));
    return RegularMap(std::move(q));
}

RegularMap build_mobius(const json& j, const std::string& path) {
    if (!j.contains("u")) parse_fail(path + ".u: missing");
    Quaternion u = quat_at(j["u"], path + ".u");
    if (!(abs(u) < 1.0)) validation_fail(path + ".u: must satisfy |u| < 1");
    bool normalize = false;
    if (j.contains("normalize")) {
        if (!j["normalize"].is_boolean())
            parse_fail(path + ".normalize: expected a boolean");
        normalize = j["normalize"].get<bool>();
    }
    RegularMap m = mobius_ball(u, normalize);
    if (j.contains("right_const")) {
        Quaternion c = quat_at(j["right_const"], path + ".right_const");
        Quaternion rc = m.right_const() ? *m.right_const() * c : c;
        return RegularMap(m.quotient(), rc);
    }
    return m;
}

RegularMap build_affine(const json& j, const std::string& path) {
    if (!j.contains("a")) parse_fail(path + ".a: missing");
    if (!j.contains("b")) parse_fail(path + ".b: missing");
    double a = num_at(j["a"], path + ".a");
    Quaternion b = quat_at(j["b"], path + ".b");
    if (!(a > 0.0)) validation_fail(path + ".a: must be positive");
    if (!(b.w >= 0.0)) validation_fail(path + ".b: real part must be nonnegative");
    return RegularMap(RegularPoly({b, Quaternion{a, 0, 0, 0}}));
}

RegularMap build_sum(const json& j, const std::string& path) {
    if (!j.contains("terms")) parse_fail(path + ".terms: missing");
    const json& ts = j["terms"];
    if (!ts.is_array() || ts.empty())
        parse_fail(path + ".terms: expected a non-empty array");
    RegularMap acc = build(ts[0], path + ".terms[0]");
    for (size_t i = 1; i < ts.size(); ++i)
        acc = map_sum(acc, build(ts[i], path + ".terms[" + std::to_string(i) + "]"));
    // Sums are admitted only as positive-real half-space maps; spot-check.
    Rng rng(0x5c0ffee5ULL);
    for (int i = 0; i < 256; ++i) {
        double re = rng.log_uniform(1e-2, 1e3);
        double im = rng.log_uniform(1e-4, 1e3);
        Quaternion q = Quaternion{re, 0, 0, 0} + rng.unit_imaginary() * im;
        Quaternion v = eval_map(acc, q);
        if (v.w < -1e-9 * (1.0 + abs(v)))
            validation_fail(path + ": sum leaves the right half-space at " +
                            format_quaternion(q));
    }
    return acc;
}

RegularMap build(const json& j, const std::string& path) {
    if (!j.is_object()) parse_fail(path + ": expected an object");
    if (!j.contains("kind")) parse_fail(path + ".kind: missing");
    if (!j["kind"].is_string()) parse_fail(path + ".kind: expected a string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "poly") return RegularMap(poly_at(j, path));
    if (kind == "quotient") return build_quotient(j, path);
    if (kind == "mobius_ball") return build_mobius(j, path);
    if (kind == "affine_halfspace") return build_affine(j, path);
    if (kind == "sum") return build_sum(j, path);
    parse_fail(path + ".kind: unknown kind \"" + kind + "\"");
}

std::string quat_json(Quaternion q) {
    return "[" + fmt17(q.w) + ", " + fmt17(q.x) + ", " + fmt17(q.y) + ", " +
           fmt17(q.z) + "]";
}

std::string poly_json(const RegularPoly& p) {
    std::string o = "{\"kind\": \"poly\", \"coeffs\": [";
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i) o += ", ";
        o += quat_json(p.coeffs[i]);
    }
    o += "]";
    if (std::isfinite(p.radius)) o += ", \"radius\": " + fmt17(p.radius);
    o += "}";
    return o;
}

}  // namespace

RegularMap parse_function_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, col] = line_col(text, byte);
        parse_fail("line " + std::to_string(line) + ", column " +
                   std::to_string(col) + ": " + e.what());
    }
    return build(j, "$");
}

RegularMap load_function_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::parse_error, "cannot open function spec: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_function_spec(ss.str());
    } catch (const Error& e) {
        raise(e.code(), path + ": " + e.what());
    }
}

std::string serialize_function_spec(const RegularMap& m) {
    if (m.is_poly()) {
        RegularMap folded = m.folded();
        return poly_json(folded.poly()) + "\n";
    }
    std::string o = "{\"kind\": \"quotient\", \"den\": " + poly_json(m.quotient().den) +
                    ", \"num\": " + poly_json(m.quotient().num);
    if (m.right_const()) o += ", \"right_const\": " + quat_json(*m.right_const());
    o += "}\n";
    return o;
}

}  // namespace srk
