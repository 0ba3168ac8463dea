#include <fstream>
#include <optional>

#include "doctest.h"
#include "srk/funcspec.hpp"
#include "srk/quotient.hpp"

using namespace srk;

namespace {

bool same_poly(const RegularPoly& a, const RegularPoly& b) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        if (a.coeffs[i] != b.coeffs[i]) return false;
    return a.radius == b.radius;
}

bool same_map(const RegularMap& a, const RegularMap& b) {
    if (a.is_poly() != b.is_poly()) return false;
    if (a.right_const().has_value() != b.right_const().has_value()) return false;
    if (a.right_const() && *a.right_const() != *b.right_const()) return false;
    if (a.is_poly()) return same_poly(a.poly(), b.poly());
    return same_poly(a.quotient().den, b.quotient().den) &&
           same_poly(a.quotient().num, b.quotient().num);
}

std::optional<ErrorCode> code_of(const std::string& text) {
    try {
        parse_function_spec(text);
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("parse a polynomial spec") {
    RegularMap f = parse_function_spec(
        R"({"kind": "poly", "coeffs": [[1,0,0,0],[0,0.5,0,0]], "radius": 2.0})");
    REQUIRE(f.is_poly());
    CHECK(f.poly().degree() == 1);
    CHECK(f.poly().radius == 2.0);
    CHECK(f.poly().coeff(1) == Quaternion{0, 0.5, 0, 0});
}

TEST_CASE("parse a quotient spec") {
    RegularMap f = parse_function_spec(
        R"({"kind": "quotient",
            "den": {"coeffs": [[1,0,0,0],[0,0.5,0,0]]},
            "num": {"coeffs": [[0,-0.5,0,0],[1,0,0,0]]},
            "right_const": [0,0,1,0]})");
    REQUIRE(!f.is_poly());
    CHECK(f.right_const().has_value());
    CHECK(*f.right_const() == Quaternion::j());
}

TEST_CASE("parse a mobius spec") {
    RegularMap f = parse_function_spec(
        R"({"kind": "mobius_ball", "u": [0.5,0,0,0], "normalize": true})");
    CHECK(abs(eval_map(f, Quaternion::one()) - Quaternion::one()) <= 1e-12);
    CHECK(abs(eval_map(f, Quaternion{0.5, 0, 0, 0})) <= 1e-12);
}

TEST_CASE("parse an affine half-space map") {
    RegularMap f = parse_function_spec(
        R"({"kind": "affine_halfspace", "a": 2, "b": [1,0,1,0]})");
    REQUIRE(f.is_poly());
    CHECK(eval_map(f, Quaternion{1, 0, 0, 0}) == Quaternion{3, 0, 1, 0});
}

TEST_CASE("parse a positive-real sum") {
    RegularMap f = parse_function_spec(
        R"({"kind": "sum", "terms": [
              {"kind": "affine_halfspace", "a": 1, "b": [0.5,0,0,0]},
              {"kind": "quotient",
               "den": {"coeffs": [[1,0,0,0],[1,0,0,0]]},
               "num": {"coeffs": [[2,0,0,0]]}}]})");
    // at q = 1: 1.5 + 2/2 = 2.5
    CHECK(abs(eval_map(f, Quaternion::one()) - Quaternion{2.5, 0, 0, 0}) <= 1e-12);
}

TEST_CASE("sums that leave the half-space are rejected") {
    CHECK(code_of(
              R"({"kind": "sum", "terms": [
                    {"kind": "poly", "coeffs": [[-5,0,0,0]]},
                    {"kind": "affine_halfspace", "a": 1, "b": [0,0,0,0]}]})") ==
          ErrorCode::validation_error);
}

TEST_CASE("malformed json reports line and column") {
    try {
        parse_function_spec("{\n  \"kind\": \"poly\",\n  blob\n}");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse_error);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("shape errors carry the json path") {
    try {
        parse_function_spec(R"({"kind": "poly", "coeffs": [[1,0,0]]})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse_error);
        CHECK(std::string(e.what()).find("$.coeffs[0]") != std::string::npos);
    }
    CHECK(code_of(R"({"coeffs": []})") == ErrorCode::parse_error);
    CHECK(code_of(R"({"kind": "nope", "coeffs": []})") == ErrorCode::parse_error);
    CHECK(code_of(R"({"kind": "quotient", "num": {"coeffs": []}})") ==
          ErrorCode::parse_error);
    CHECK(code_of(R"({"kind": "mobius_ball", "u": [0.5,0,0,0], "normalize": 3})") ==
          ErrorCode::parse_error);
    CHECK(code_of(R"({"kind": "sum", "terms": []})") == ErrorCode::parse_error);
}

TEST_CASE("semantic violations are validation errors") {
    CHECK(code_of(R"({"kind": "mobius_ball", "u": [1,0,0,0]})") ==
          ErrorCode::validation_error);
    CHECK(code_of(R"({"kind": "affine_halfspace", "a": 0, "b": [1,0,0,0]})") ==
          ErrorCode::validation_error);
    CHECK(code_of(R"({"kind": "affine_halfspace", "a": 1, "b": [-1,0,0,0]})") ==
          ErrorCode::validation_error);
    CHECK(code_of(R"({"kind": "poly", "coeffs": [[1,0,0,0]], "radius": -1})") ==
          ErrorCode::validation_error);
    CHECK(code_of(R"({"kind": "quotient",
                      "den": {"coeffs": [[0,0,0,0]]},
                      "num": {"coeffs": [[1,0,0,0]]}})") ==
          ErrorCode::validation_error);
}

TEST_CASE("round trip is exact") {
    const char* specs[] = {
        R"({"kind": "poly", "coeffs": [[0.1,-0.25,0,3e-7],[1,2,3,4]], "radius": 1.5})",
        R"({"kind": "quotient",
            "den": {"coeffs": [[1,0,0,0],[0,0.5,0,0]]},
            "num": {"coeffs": [[0,-0.5,0,0],[1,0,0,0]]},
            "right_const": [0.25,0.125,0,-1]})",
        R"({"kind": "mobius_ball", "u": [0.3,0.14159,-0.2,0.05], "normalize": true})",
        R"({"kind": "affine_halfspace", "a": 0.7, "b": [0.3,0.1,0,2]})",
    };
    for (const char* s : specs) {
        RegularMap once = parse_function_spec(s);
        std::string text = serialize_function_spec(once);
        RegularMap twice = parse_function_spec(text);
        CHECK(same_map(once, twice));
        CHECK(serialize_function_spec(twice) == text);
    }
}

TEST_CASE("load from disk") {
    const char* path = "/tmp/srk_funcspec_roundtrip.json";
    {
        std::ofstream out(path);
        out << R"({"kind": "poly", "coeffs": [[0,0,0,0],[1,0,0,0]]})";
    }
    RegularMap f = load_function_spec(path);
    CHECK(f.is_poly());
    CHECK(f.poly().degree() == 1);
    try {
        load_function_spec("/tmp/srk_funcspec_missing.json");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse_error);
        CHECK(std::string(e.what()).find("missing.json") != std::string::npos);
    }
}
