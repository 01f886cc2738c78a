#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asf/certificate.hpp"
#include "json.hpp"

namespace asf {

// Insertion-ordered so a fixed seed dumps byte-identical documents.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

// Every document states what the supported ranks actually cover.
inline constexpr const char* kScaleStatement = "n=2,3 exhaustive; n=4 sampled";

// Rationals serialize as "num/den" strings, elements as their canonical
// text encoding, monomials as [j, i, exponent] triples sorted by (j, i).
Json json_rational(const Rational& q);
Json json_element(const AffineWeylElement& w);
Json json_monomial(int n, const Monomial& m);
Json json_membership(const MembershipReport& rep);
Json json_fixed_point(const FixedPointResult& res);

// Top-level document skeleton: versions, kind, header with rank, seed,
// spectral values and the scale statement. Callers fill ["payload"].
Json report_envelope(const std::string& kind, int n, std::uint64_t seed,
                     const SpectralParams& sp);

// Structural checks mirroring docs/report.schema.json, one message per
// violation; empty means well formed. Validated before every emission.
std::vector<std::string> validate_report(const Json& doc);

}  // namespace asf
