#include "powg/paper_formulas.hpp"

#include "powg/errors.hpp"

#include <array>

namespace powg {

namespace {

// n = 2^k p, h = 2^(k-1) p, q = 2^(k-2) p
struct Sizes {
    explicit Sizes(const FamilyParams& params)
    {
        params.validate();
        n = params.n();
        h = params.half();
        q = params.quarter();
    }
    long long n, h, q;
};

}  // namespace

HosoyaCoefficients paper_hosoya_coeffs(const FamilyParams& params)
{
    const Sizes sz{params};
    const BigInt p = params.p;
    const BigInt pow_2k_1 = BigInt{1} << (2 * params.k - 1);
    const BigInt pow_k_2 = BigInt{1} << (params.k - 2);
    HosoyaCoefficients c;
    c.dis0 = 2 * BigInt{sz.n};
    c.dis1 = pow_2k_1 * p * p + 5 * p * pow_k_2;
    c.dis2 = 3 * pow_2k_1 * p * p - 9 * pow_k_2 * p;
    return c;
}

RationalExponentPolynomial paper_rs_hosoya(const FamilyParams& params, PaperMode mode)
{
    const Sizes sz{params};
    const long long n = sz.n, h = sz.h, q = sz.q;
    const BigInt vw = exact_div(BigInt{n - 2} * (n - 3), 2, "vw edge count");

    RationalExponentPolynomial poly;
    poly.add(15 * q - 2, 1);                                   // e-u
    poly.add(7 * h - 2, n - 2);                                // e-h1
    poly.add(mode == PaperMode::printed ? 3 * n - 2 : 3 * n - 1, h);  // e-h2
    poly.add(3 * n, h);                                        // e-h3
    poly.add(11 * q, h);                                       // u-h3
    poly.add(3 * n - 2, vw);                                   // v-w
    poly.add(2 * n + 2, q);                                    // y-z
    return poly;
}

std::map<std::string, BigInt> paper_degree_claims(const FamilyParams& params)
{
    const Sizes sz{params};
    return {
        {"e", 2 * sz.n - 1}, {"u", 3 * sz.h - 1}, {"h1", sz.n - 1}, {"h2", 1}, {"h3", 3},
    };
}

std::map<std::string, BigInt> paper_edge_type_counts(const FamilyParams& params)
{
    const Sizes sz{params};
    return {
        {"eu", 1},
        {"eh1", sz.n - 2},
        {"eh2", sz.h},
        {"eh3", sz.h},
        {"uh3", sz.h},
        {"vw", exact_div(BigInt{sz.n - 2} * (sz.n - 3), 2, "vw edge count")},
        {"yz", sz.q},
    };
}

namespace {

constexpr std::array<const char*, 18> family_names{"M1",  "M2",  "M3",  "M4",  "M5",  "M6",
                                                   "M7",  "M8",  "M9",  "M10", "M11", "M12",
                                                   "M13", "M14", "M15", "N11", "P11", "Q11"};

}  // namespace

std::string to_string(MatchingFamily family)
{
    return family_names.at(static_cast<std::size_t>(family));
}

MatchingFamily parse_matching_family(const std::string& text)
{
    for (std::size_t i = 0; i < family_names.size(); ++i)
        if (text == family_names[i])
            return static_cast<MatchingFamily>(i);
    throw InvalidInput{"unknown matching family '" + text + "'"};
}

const std::vector<MatchingFamily>& summed_families()
{
    using F = MatchingFamily;
    static const std::vector<F> families{F::M1,  F::M2,  F::M3,  F::M4,  F::M5,  F::M6,  F::M7, F::M8,
                                         F::M9,  F::M10, F::M11, F::M12, F::M13, F::M14, F::M15};
    return families;
}

const std::vector<MatchingFamily>& m11_cases()
{
    static const std::vector<MatchingFamily> cases{MatchingFamily::N11, MatchingFamily::P11, MatchingFamily::Q11};
    return cases;
}

std::pair<long long, long long> family_range(MatchingFamily family, const FamilyParams& params)
{
    const Sizes sz{params};
    const long long h = sz.h, q = sz.q;
    switch (family) {
    case MatchingFamily::M1: return {1, h};
    case MatchingFamily::M2: return {1, 1};
    case MatchingFamily::M3: return {1, 2};
    case MatchingFamily::M4: return {1, q};
    case MatchingFamily::M5: return {2, h + 1};
    case MatchingFamily::M6: return {2, 3 * q};
    // M7^2 plus the sum from 3 to 2^(k-2)p - 1
    case MatchingFamily::M7: return {2, q - 1};
    case MatchingFamily::M8: return {2, h};
    case MatchingFamily::M9: return {2, 2};
    case MatchingFamily::M10: return {2, q + 1};
    case MatchingFamily::M11: return {3, 3 * q};
    case MatchingFamily::M12: return {3, 3 * q};
    case MatchingFamily::M13: return {3, q + 1};
    case MatchingFamily::M14: return {3, h + 1};
    case MatchingFamily::M15: return {4, 3 * q};
    case MatchingFamily::N11: return {3, 3 * q - 1};
    case MatchingFamily::P11: return {4, 3 * q};
    case MatchingFamily::Q11: return {4, 3 * q};
    }
    throw FormulaError{"unknown matching family"};
}

namespace {

class FamilyEvaluator {
public:
    FamilyEvaluator(const FamilyParams& params, PaperMode mode) : sz_(params), mode_(mode) {}

    MatchingFamilyTerm eval(MatchingFamily family, long long i)
    {
        warnings_.clear();
        MatchingFamilyTerm term;
        term.family = family;
        term.order = i;
        term.count = count(family, i);
        term.warnings = warnings_;
        return term;
    }

private:
    // i-matchings of K_size per the selected mode; zero past the largest order.
    BigInt complete(long long size, long long i)
    {
        if (i < 0 || 2 * i > size)
            return 0;
        return complete_graph_matchings(size, i, mode_);
    }

    // As `complete`, but a printed 1/i at i = 0 is reported and taken as zero.
    BigInt complete_or_warn(long long size, long long i, const std::string& where)
    {
        if (i == 0 && mode_ == PaperMode::printed) {
            warnings_.push_back(where + ": printed factor 1/(i-2) is undefined at this order; summand taken as 0");
            return 0;
        }
        return complete(size, i);
    }

    BigInt half_of(const BigInt& v, const std::string& what) { return exact_div(v, 2, what); }

    BigInt count(MatchingFamily family, long long i)
    {
        const long long n = sz_.n, h = sz_.h, q = sz_.q;
        switch (family) {
        case MatchingFamily::M1:
            return complete(n, i);

        case MatchingFamily::M2:
            return h;

        case MatchingFamily::M3:
            return i == 1 ? BigInt{n} : BigInt{h} * (h - 1);

        case MatchingFamily::M4:
            return binomial(q, i);

        case MatchingFamily::M5: {
            const BigInt pairs = half_of(BigInt{h} * (h - 1), "M5 order-2 E-10 matchings");
            const std::string where = "M5^" + std::to_string(i);
            if (i == h + 1)
                return pairs * complete_or_warn(n - 2, h - 1, where);
            return BigInt{n} * complete(n - 1, i - 1) + pairs * complete_or_warn(n - 2, i - 2, where);
        }

        case MatchingFamily::M6: {
            // F^j = 0 for j > 2^(k-1)p, H^m = 0 for m > 2^(k-2)p
            BigInt sum = 0;
            for (long long j = 1; j <= i - 1; ++j) {
                const long long m = i - j;
                if (j > h || m > q)
                    continue;
                sum += complete(n, j) * binomial(q, m);
            }
            return sum;
        }

        case MatchingFamily::M7:
            if (i == 2)
                return BigInt{n} * (q - 1);
            return BigInt{n} * binomial(q - 1, i - 1) + BigInt{2} * q * binomial(q - 1, i - 2) +
                   2 * half_of(BigInt{h} * (h - 2), "M7 E-10 pair count") * binomial(q - 2, i - 2);

        case MatchingFamily::M8:
            return BigInt{h} * complete(n - 1, i - 1);

        case MatchingFamily::M9:
            return BigInt{h} * h;

        case MatchingFamily::M10:
            return BigInt{h} * binomial(q, i - 1);

        case MatchingFamily::M11:
            if (i == 3)
                return count(MatchingFamily::N11, i);
            if (i == 3 * q)
                return count(MatchingFamily::Q11, i);
            return count(MatchingFamily::N11, i) + count(MatchingFamily::P11, i) + count(MatchingFamily::Q11, i);

        case MatchingFamily::N11: {
            // B = 2^k p, C^j = 0 for j > 2^(k-1)p - 1, D^m = 0 for m > 2^(k-2)p - 1
            BigInt sum = 0;
            for (long long j = 1; j <= i - 2; ++j) {
                const long long m = i - j - 1;
                if (j > h - 1 || m > q - 1)
                    continue;
                sum += BigInt{n} * complete(n - 1, j) * binomial(q - 1, m);
            }
            return sum;
        }

        case MatchingFamily::P11: {
            // R = 2^(k-1)p, S^j = 0 for j > 2^(k-1)p - 1, T^m = 0 for m > 2^(k-2)p - 1
            BigInt sum = 0;
            for (long long j = 1; j <= i - 3; ++j) {
                const long long m = i - j - 2;
                if (j > h - 1 || m > q - 1)
                    continue;
                sum += BigInt{h} * complete(n - 2, j) * binomial(q - 1, m);
            }
            return sum;
        }

        case MatchingFamily::Q11: {
            // X = 2 * 2^(k-1)p (2^(k-1)p - 1) / 2, Y^j = 0 for j > 2^(k-1)p - 1, Z^m = 0 for m > 2^(k-2)p - 2
            const BigInt x = 2 * half_of(BigInt{h} * (h - 1), "Q11 E-10 pair count");
            BigInt sum = 0;
            for (long long j = 1; j <= i - 3; ++j) {
                const long long m = i - j - 2;
                if (j > h - 1 || m > q - 2)
                    continue;
                sum += x * complete(n - 2, j) * binomial(q - 2, m);
            }
            return sum;
        }

        case MatchingFamily::M12: {
            // J^j = 0 for j > 2^(k-1)p - 1; L is zeroed when i - j - 2 > 2^(k-2)p, as printed
            BigInt sum = 0;
            for (long long j = 1; j <= i - 2; ++j) {
                if (j > h - 1 || i - j - 2 > q)
                    continue;
                sum += BigInt{h} * complete(n - 1, j) * binomial(q, i - j - 1);
            }
            return sum;
        }

        case MatchingFamily::M13:
            return BigInt{h} * h * binomial(q - 1, i - 2);

        case MatchingFamily::M14:
            return BigInt{h} * n * complete(n - 2, i - 2);

        case MatchingFamily::M15: {
            // T^j = 0 for j > 2^(k-1)p - 1, U^m = C(2^k p - 1, m) zeroed for m > 2^(k-2)p - 1
            BigInt sum = 0;
            for (long long j = 1; j <= i - 3; ++j) {
                const long long m = i - j - 2;
                if (j > h - 1 || m > q - 1)
                    continue;
                sum += BigInt{h} * n * complete(n - 2, j) * binomial(n - 1, m);
            }
            return sum;
        }
        }
        throw FormulaError{"unknown matching family"};
    }

    Sizes sz_;
    PaperMode mode_;
    std::vector<std::string> warnings_;
};

}  // namespace

MatchingFamilyTerm eval_matching_family(MatchingFamily family, long long i, const FamilyParams& params,
                                        PaperMode mode)
{
    const auto [lo, hi] = family_range(family, params);
    if (i < lo || i > hi)
        throw FormulaError{to_string(family) + " is not defined at order " + std::to_string(i) + " (range " +
                           std::to_string(lo) + ".." + std::to_string(hi) + ")"};
    return FamilyEvaluator{params, mode}.eval(family, i);
}

PaperHosoyaIndex paper_hosoya_index(const FamilyParams& params, PaperMode mode)
{
    FamilyEvaluator evaluator{params, mode};
    PaperHosoyaIndex result;
    result.total = 1;
    for (auto family : summed_families()) {
        const auto [lo, hi] = family_range(family, params);
        for (long long i = lo; i <= hi; ++i) {
            auto term = evaluator.eval(family, i);
            result.total += term.count;
            for (const auto& w : term.warnings)
                result.warnings.push_back(w);
            result.terms.push_back(std::move(term));
        }
    }
    for (auto family : m11_cases()) {
        const auto [lo, hi] = family_range(family, params);
        for (long long i = lo; i <= hi; ++i)
            result.m11_terms.push_back(evaluator.eval(family, i));
    }
    return result;
}

}  // namespace powg
