#pragma once

#include <array>
#include <string>
#include <vector>

#include "hm/cyclotomic.hpp"
#include "hm/plane.hpp"
#include "hm/rational.hpp"

namespace hm {

/// Input grammar (documented in the CLI help):
///   scalar     rationals "n" or "n/d"; over Q(zeta_5) also polynomial
///              literals in z, e.g. "1+2*z^3", "-z", "1/2*z^2"
///   covector   5 comma-separated scalars, optional "cov:" prefix
///   plane      "c0,..,c4 ; d0,..,d4" (two covectors) or
///              "plucker: p01,p02,p03,p04,p12,p13,p14,p23,p24,p34"
///              (lexicographic order; validated against the quadrics)
///   line       three covector groups "c ; d ; e"
///   pencil     three covector groups "x ; y ; z", members x^(s y + t z)

std::vector<std::string> split_groups(const std::string& text, char sep);

template <class K>
K parse_scalar(const std::string& text);
template <>
inline Rational parse_scalar<Rational>(const std::string& text) {
    return Rational::parse(text);
}
template <>
inline Cyclotomic parse_scalar<Cyclotomic>(const std::string& text) {
    return Cyclotomic::parse(text);
}

template <class K>
std::array<K, 5> parse_covector(const std::string& text) {
    std::string body = text;
    auto colon = body.find(':');
    if (colon != std::string::npos) body = body.substr(colon + 1);
    std::vector<std::string> parts = split_groups(body, ',');
    if (parts.size() != 5) throw ValidationError("covector needs 5 entries: '" + text + "'");
    std::array<K, 5> out;
    for (size_t i = 0; i < 5; ++i) out[i] = parse_scalar<K>(parts[i]);
    return out;
}

template <class K>
std::array<K, 10> parse_plucker(const std::string& text) {
    std::vector<std::string> parts = split_groups(text, ',');
    if (parts.size() != 10) throw ValidationError("Pluecker point needs 10 entries: '" + text + "'");
    std::array<K, 10> out;
    for (size_t i = 0; i < 10; ++i) out[i] = parse_scalar<K>(parts[i]);
    return out;
}

template <class K>
PlaneSpec<K> parse_plane(const std::string& text) {
    std::string body = text;
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string lead = strip(body);
    if (lead.rfind("plucker:", 0) == 0) return PlaneSpec<K>::from_plucker(parse_plucker<K>(lead.substr(8)));
    std::vector<std::string> groups = split_groups(body, ';');
    if (groups.size() == 1) return PlaneSpec<K>::from_plucker(parse_plucker<K>(groups[0]));
    if (groups.size() != 2) throw ValidationError("plane needs two covectors or a Pluecker point: '" + text + "'");
    return PlaneSpec<K>(parse_covector<K>(groups[0]), parse_covector<K>(groups[1]));
}

template <class K>
LineSpec<K> parse_line(const std::string& text) {
    std::vector<std::string> groups = split_groups(text, ';');
    if (groups.size() != 3) throw ValidationError("line needs three covectors: '" + text + "'");
    return LineSpec<K>(std::array<std::array<K, 5>, 3>{
        parse_covector<K>(groups[0]), parse_covector<K>(groups[1]), parse_covector<K>(groups[2])});
}

template <class K>
std::array<std::array<K, 5>, 3> parse_three_covectors(const std::string& text) {
    std::vector<std::string> groups = split_groups(text, ';');
    if (groups.size() != 3) throw ValidationError("expected three covectors: '" + text + "'");
    return {parse_covector<K>(groups[0]), parse_covector<K>(groups[1]), parse_covector<K>(groups[2])};
}

} // namespace hm
