#pragma once

#include "powg/bigint.hpp"
#include "powg/distance.hpp"
#include "powg/group.hpp"
#include "powg/matching.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace powg {

/// Closed-form evaluators for the published invariants of P(G), G the
/// (k, p) family group. Everything is evaluated numerically at a given
/// (k, p) over exact integers; nothing here looks at a graph.
///
/// Where a published statement and its own derivation disagree, `printed`
/// reproduces the statement and `corrected` applies the derivation's value.
/// The only deltas are the 1/i -> 1/i! factor in the K_n matching counts and
/// the e-h2 reciprocal-status exponent 3*2^k p - 2 -> 3*2^k p - 1.

struct HosoyaCoefficients {
    BigInt dis0;
    BigInt dis1;
    BigInt dis2;

    friend bool operator==(const HosoyaCoefficients&, const HosoyaCoefficients&) = default;
};

HosoyaCoefficients paper_hosoya_coeffs(const FamilyParams& params);

RationalExponentPolynomial paper_rs_hosoya(const FamilyParams& params, PaperMode mode);

/// Claimed degrees keyed by vertex class: e, u, h1, h2, h3.
std::map<std::string, BigInt> paper_degree_claims(const FamilyParams& params);

/// Claimed edge counts keyed by endpoint class: eu, eh1, eh2, eh3, uh3, vw, yz.
std::map<std::string, BigInt> paper_edge_type_counts(const FamilyParams& params);

enum class MatchingFamily { M1, M2, M3, M4, M5, M6, M7, M8, M9, M10, M11, M12, M13, M14, M15, N11, P11, Q11 };

std::string to_string(MatchingFamily family);
MatchingFamily parse_matching_family(const std::string& text);

/// M1..M15 in summation order.
const std::vector<MatchingFamily>& summed_families();
/// N11, P11, Q11: the three cases assembled into M11.
const std::vector<MatchingFamily>& m11_cases();

/// Inclusive order range [lo, hi] the family is summed over (or, for the
/// M11 cases, the range their formulas are stated for). Empty when lo > hi.
std::pair<long long, long long> family_range(MatchingFamily family, const FamilyParams& params);

struct MatchingFamilyTerm {
    MatchingFamily family = MatchingFamily::M1;
    long long order = 0;
    BigInt count;
    /// Summands that are undefined as printed and were taken as zero.
    std::vector<std::string> warnings;
};

/// Count of the family's matchings of order i. Throws FormulaError when i
/// is outside family_range.
MatchingFamilyTerm eval_matching_family(MatchingFamily family, long long i, const FamilyParams& params,
                                        PaperMode mode);

struct PaperHosoyaIndex {
    BigInt total;                              ///< 1 + every summed term
    std::vector<MatchingFamilyTerm> terms;     ///< M1..M15, ascending order within each family
    std::vector<MatchingFamilyTerm> m11_terms; ///< N11, P11, Q11 breakdown (already inside M11)
    std::vector<std::string> warnings;
};

PaperHosoyaIndex paper_hosoya_index(const FamilyParams& params, PaperMode mode);

}  // namespace powg
