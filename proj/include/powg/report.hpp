#pragma once

#include "powg/bigint.hpp"
#include "powg/cache.hpp"
#include "powg/distance.hpp"
#include "powg/group.hpp"
#include "powg/matching.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace powg {

/// Integers up to 2^53 as JSON numbers, larger ones as decimal strings.
nlohmann::json big_to_json(const BigInt& value);
/// Inverse of big_to_json.
BigInt big_from_json(const nlohmann::json& value);

nlohmann::json poly_to_json(const BigPoly& coeffs);
BigPoly poly_from_json(const nlohmann::json& value);

/// Exponent (rendered "a" or "a/b") -> coefficient.
nlohmann::json rs_poly_to_json(const RationalExponentPolynomial& poly);

struct VerifyOptions {
    /// Matching-engine stages are skipped for graphs with more vertices.
    std::size_t skip_index_above = 24;
    std::size_t memo_cap = MatchingOptions{}.memo_cap;
    /// Null disables caching.
    ResultCache* cache = nullptr;
};

struct CaseReport {
    std::string id;           ///< e.g. "sdl-k2-p3"
    nlohmann::json report;    ///< deterministic content
    nlohmann::json timings;   ///< seconds per stage
};

/// One oracle-vs-formula comparison for the (k, p) family group.
/// Throws ResourceLimit if the matching engine hits its memo cap.
CaseReport verify_case(const FamilyParams& params, const VerifyOptions& options);

/// Runs every (k, p) in the cartesian product and assembles the document:
/// {"code_version", "configuration", "cases": [...], "timings": {...}}.
/// Everything outside "timings" is deterministic.
nlohmann::json verify_cases(const std::vector<int>& ks, const std::vector<long long>& ps,
                            const VerifyOptions& options);

}  // namespace powg
