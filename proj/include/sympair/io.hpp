#pragma once

#include <cctype>
#include <charconv>
#include <string>

#include "json.hpp"
#include "pairsearch.hpp"

namespace sympair {

using json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

struct BadFormat : std::invalid_argument {
    explicit BadFormat(const std::string& what) : std::invalid_argument(what) {}
};

/// Polynomial text format: comma-separated coefficients, constant term first
/// ("4,1,4,1" is 4 + x + 4x^2 + x^3; the zero polynomial is "0").
inline std::string poly_to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= f.degree(); ++i) {
        if (i) s += ',';
        s += std::to_string(f.coeff_raw(i));
    }
    return s;
}

namespace detail {

inline std::vector<i64> parse_coeff_list(const std::string& text) {
    std::vector<i64> out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::size_t a = pos, b = end;
        while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
        i64 value = 0;
        const auto res = std::from_chars(text.data() + a, text.data() + b, value);
        if (res.ec != std::errc() || res.ptr != text.data() + b)
            throw BadFormat("bad coefficient list: '" + text + "'");
        out.push_back(value);
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

}  // namespace detail

inline Polynomial poly_from_string(const PrimeField& F, const std::string& text) {
    return Polynomial(F, detail::parse_coeff_list(text));
}

/// Vectors use the same text format, but keep their fixed length.
inline std::string vector_to_string(const FpVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v.raw(i));
    }
    return s;
}

inline FpVector vector_from_string(const PrimeField& F, std::size_t n,
                                   const std::string& text) {
    const auto coords = detail::parse_coeff_list(text);
    if (coords.size() != n) throw BadFormat("expected " + std::to_string(n) + " coordinates");
    return FpVector(F, coords);
}

/// Code spec: {"p", "n", "eta", "factors": [{"coeffs", "mult"}, ...]}.
inline json code_spec_json(const ConstacyclicCode& code) {
    json factors = json::array();
    for (const auto& [m, e] : code.factors().factors())
        factors.push_back({{"coeffs", poly_to_string(m)}, {"mult", e}});
    return {{"p", code.field().modulus()},
            {"n", code.n()},
            {"eta", code.eta()},
            {"factors", std::move(factors)}};
}

namespace detail {

/// Non-negative integer field, tolerant of signed storage.
inline bool is_count(const json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<i64>() >= 0);
}

}  // namespace detail

inline ConstacyclicCode code_from_spec_json(const json& j) {
    if (!j.is_object()) throw BadFormat("code spec must be an object");
    for (const char* key : {"p", "n", "eta", "factors"})
        if (!j.contains(key)) throw BadFormat(std::string("code spec needs '") + key + "'");
    if (!detail::is_count(j["p"]) || !detail::is_count(j["n"]) ||
        !j["eta"].is_number_integer() || !j["factors"].is_array())
        throw BadFormat("code spec field has the wrong type");
    const PrimeField F(j["p"].get<u64>());
    std::vector<FactoredPolynomial::Factor> fs;
    for (const auto& f : j["factors"]) {
        if (!f.is_object() || !f.contains("coeffs") || !f.contains("mult") ||
            !f["coeffs"].is_string() || !detail::is_count(f["mult"]))
            throw BadFormat("factor entries need a 'coeffs' string and a 'mult' count");
        fs.emplace_back(poly_from_string(F, f["coeffs"].get<std::string>()),
                        f["mult"].get<u64>());
    }
    return build_code(F, j["n"].get<std::size_t>(), j["eta"].get<i64>(),
                      FactoredPolynomial(F, std::move(fs)));
}

inline json distance_certificate_json(const DistanceCertificate& cert) {
    json levels = json::array();
    for (const auto& lv : cert.per_level)
        levels.push_back(
            {{"t", lv.t},
             {"pt", lv.pt},
             {"dh_bar", lv.dh_bar == kInfiniteDistance ? json() : json(lv.dh_bar)},
             {"product", lv.product == kInfiniteDistance ? json() : json(lv.product)}});
    return {{"value", cert.dh == kInfiniteDistance ? json() : json(cert.dh)},
            {"witness_t", cert.witness_t},
            {"per_level", std::move(levels)}};
}

inline json pair_certificate_json(const PairDistanceCertificate& cert) {
    json classes = json::array();
    for (const auto& c : cert.classes)
        classes.push_back(
            {{"w", c.w}, {"r", c.r}, {"patterns", c.patterns}, {"solvable", c.solvable}});
    return {{"value", cert.dp},
            {"dh", cert.dh},
            {"mds", cert.mds},
            {"witness", vector_to_string(cert.witness)},
            {"classes", std::move(classes)}};
}

}  // namespace sympair
