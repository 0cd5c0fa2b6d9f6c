#include "powg/report.hpp"

#include "powg/errors.hpp"
#include "powg/paper_formulas.hpp"
#include "powg/power_graph.hpp"

#include <chrono>
#include <future>
#include <set>

namespace powg {

using nlohmann::json;

json big_to_json(const BigInt& value)
{
    static const BigInt limit = BigInt{1} << 53;
    if (value <= limit && value >= -limit)
        return static_cast<long long>(value);
    return to_string(value);
}

BigInt big_from_json(const json& value)
{
    if (value.is_string())
        return BigInt{value.get<std::string>()};
    if (value.is_number_integer())
        return BigInt{value.get<long long>()};
    throw InvalidInput{"expected an integer in JSON"};
}

json poly_to_json(const BigPoly& coeffs)
{
    json out = json::array();
    for (const auto& c : coeffs)
        out.push_back(big_to_json(c));
    return out;
}

BigPoly poly_from_json(const json& value)
{
    BigPoly out;
    for (const auto& c : value)
        out.push_back(big_from_json(c));
    return out;
}

json rs_poly_to_json(const RationalExponentPolynomial& poly)
{
    json out = json::object();
    for (const auto& [e, c] : poly.terms())
        out[to_string(e)] = big_to_json(c);
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class StageTimer {
public:
    explicit StageTimer(json& sink) : sink_(sink) {}
    void mark(const std::string& stage)
    {
        auto now = Clock::now();
        sink_[stage] = std::chrono::duration<double>(now - last_).count();
        last_ = now;
    }

private:
    json& sink_;
    Clock::time_point last_ = Clock::now();
};

class DiffLog {
public:
    void add(const std::string& invariant, const std::string& location, json oracle, json paper,
             const std::string& mode)
    {
        if (oracle == paper)
            return;
        rows_.push_back({{"invariant", invariant},
                         {"location", location},
                         {"oracle", std::move(oracle)},
                         {"paper", std::move(paper)},
                         {"mode", mode}});
    }
    json rows() const { return rows_; }

private:
    json rows_ = json::array();
};

struct EngineRun {
    BigPoly coeffs;
    BigPoly crosscheck;
    json stats;
};

json stats_to_json(const MatchingStats& s)
{
    return {{"memo_entries", s.memo_entries},
            {"memo_hits", s.memo_hits},
            {"expansions", s.expansions},
            {"factorizations", s.factorizations},
            {"largest_component", s.largest_component}};
}

// Matching polynomial with a second run under another pivot rule, cached as a unit.
EngineRun run_engine(const Graph& graph, const FamilyParams& params, const std::string& invariant,
                     const VerifyOptions& options)
{
    CacheKey key{"sdl", params.k, params.p, invariant, "oracle"};
    if (options.cache)
        if (auto hit = options.cache->get(key))
            return {poly_from_json(hit->at("coeffs")), poly_from_json(hit->at("crosscheck")), hit->at("stats")};

    MatchingStats stats;
    MatchingOptions primary{options.memo_cap, PivotRule::max_degree};
    MatchingOptions secondary{options.memo_cap, PivotRule::max_degree_reversed};
    EngineRun run;
    run.coeffs = matching_polynomial(graph, primary, &stats).coeffs;
    run.crosscheck = matching_polynomial(graph, secondary).coeffs;
    run.stats = stats_to_json(stats);
    if (options.cache)
        options.cache->put(key, {{"coeffs", poly_to_json(run.coeffs)},
                                 {"crosscheck", poly_to_json(run.crosscheck)},
                                 {"stats", run.stats}});
    return run;
}

json degree_values(const Graph& graph, const std::vector<Element>& vertices)
{
    std::set<std::size_t> degrees;
    for (auto v : vertices)
        degrees.insert(graph.degree(v));
    if (degrees.size() == 1)
        return *degrees.begin();
    return json(std::vector<std::size_t>(degrees.begin(), degrees.end()));
}

json count_map(const std::map<std::string, std::vector<Edge>>& classes)
{
    json out = json::object();
    for (const auto& [name, edges] : classes)
        out[name] = edges.size();
    return out;
}

json big_map(const std::map<std::string, BigInt>& values)
{
    json out = json::object();
    for (const auto& [name, v] : values)
        out[name] = big_to_json(v);
    return out;
}

json term_to_json(const MatchingFamilyTerm& term)
{
    json out{{"family", to_string(term.family)}, {"order", term.order}, {"count", big_to_json(term.count)}};
    if (!term.warnings.empty())
        out["warnings"] = term.warnings;
    return out;
}

}  // namespace

CaseReport verify_case(const FamilyParams& params, const VerifyOptions& options)
{
    params.validate();
    CaseReport result;
    result.id = "sdl-k" + std::to_string(params.k) + "-p" + std::to_string(params.p);
    result.timings = json::object();
    StageTimer timer{result.timings};

    const FiniteGroup group = build_family(params);
    const GroupPartition part = partition(group, params);
    timer.mark("group");
    const Graph graph = build_power_graph(group);
    timer.mark("power_graph");

    json& report = result.report;
    report["case"] = {{"family", "sdl"}, {"k", params.k}, {"p", params.p}, {"order", group.order()}};
    DiffLog diffs;

    // oracle: distances
    json oracle = json::object();
    const auto dist = hosoya_polynomial(graph);
    oracle["hosoya_coefficients"] = dist.counts;
    oracle["unreachable_pairs"] = dist.unreachable_pairs;
    const auto diam = diameter(graph);
    oracle["diameter"] = diam ? json(*diam) : json("infinite");
    const auto rs_poly = rs_hosoya_polynomial(graph);
    oracle["rs_hosoya"] = rs_poly_to_json(rs_poly);
    timer.mark("distance");

    json degree_hist = json::object();
    for (auto [deg, count] : degree_histogram(graph))
        degree_hist[std::to_string(deg)] = count;
    oracle["degree_histogram"] = degree_hist;
    const std::vector<Element> e_only{group.identity()};
    const std::vector<Element> u_only{part.u};
    std::map<std::string, json> class_degrees{
        {"e", degree_values(graph, e_only)},  {"u", degree_values(graph, u_only)},
        {"h1", degree_values(graph, part.h1)}, {"h2", degree_values(graph, part.h2)},
        {"h3", degree_values(graph, part.h3)},
    };
    oracle["degrees"] = class_degrees;

    const auto classes = classify_edges(graph, part);
    oracle["edge_classification"] = {{"membership", count_map(classes.membership)},
                                     {"primary", count_map(classes.primary)},
                                     {"proof_types", count_map(classes.proof_types)},
                                     {"total", classes.total_edges}};
    const auto structure = verify_structure_theorem(graph, part);
    oracle["structure_theorem"] = {{"total_edges", structure.total_edges},
                                   {"rotation_edges", structure.rotation_edges},
                                   {"cyclic_graph_edges", structure.cyclic_graph_edges},
                                   {"pendant_edges", structure.pendant_edges},
                                   {"expected_pendant_edges", structure.expected_pendant_edges},
                                   {"pair_edges", structure.pair_edges},
                                   {"expected_pair_edges", structure.expected_pair_edges},
                                   {"rotation_matches_cyclic", structure.rotation_matches_cyclic},
                                   {"parts_present", structure.parts_present},
                                   {"cover", structure.cover},
                                   {"disjoint", structure.disjoint},
                                   {"count_identity", structure.count_identity},
                                   {"holds", structure.holds()}};
    timer.mark("classification");

    // oracle: matchings
    json engine_stats = json::object();
    const auto rotations = part.rotations();
    std::optional<BigPoly> rotation_poly;
    if (rotations.size() <= options.skip_index_above) {
        auto run = run_engine(induced_subgraph(graph, rotations), params, "rotation-matching-poly", options);
        rotation_poly = run.coeffs;
        oracle["rotation_matching_polynomial"] = poly_to_json(run.coeffs);
        engine_stats["rotation"] = run.stats;
    }
    else
        oracle["rotation_matching_polynomial"] = "skipped";

    std::optional<BigPoly> full_poly;
    if (graph.size() <= options.skip_index_above) {
        auto run = run_engine(graph, params, "matching-poly", options);
        full_poly = run.coeffs;
        const MatchingPolynomial mp{run.coeffs};
        const MatchingPolynomial cross{run.crosscheck};
        oracle["matching_polynomial"] = poly_to_json(run.coeffs);
        oracle["hosoya_index"] = big_to_json(mp.hosoya_index());
        oracle["hosoya_index_crosscheck"] = {{"pivot", "max_degree_reversed"},
                                             {"hosoya_index", big_to_json(cross.hosoya_index())},
                                             {"agrees", cross == mp}};
        engine_stats["power_graph"] = run.stats;
    }
    else {
        oracle["matching_polynomial"] = "skipped";
        oracle["hosoya_index"] = "skipped";
        oracle["hosoya_index_crosscheck"] = "skipped";
    }
    report["oracle"] = oracle;
    report["engine_stats"] = engine_stats;
    timer.mark("matching");

    // formulas and diffs
    const auto coeffs = paper_hosoya_coeffs(params);
    const auto degree_claims = paper_degree_claims(params);
    const auto edge_claims = paper_edge_type_counts(params);

    const std::vector<BigInt> paper_dis{coeffs.dis0, coeffs.dis1, coeffs.dis2};
    for (std::size_t i = 0; i < std::max(paper_dis.size(), dist.counts.size()); ++i)
        diffs.add("hosoya_coefficients", "dis" + std::to_string(i), json(dist.at(i)),
                  big_to_json(i < paper_dis.size() ? paper_dis[i] : BigInt{0}), "both");
    diffs.add("diameter", "diameter", oracle["diameter"], 2, "both");
    for (const auto& [cls, claim] : degree_claims)
        diffs.add("degrees", "deg(" + cls + ")", class_degrees.at(cls), big_to_json(claim), "both");
    for (const auto& name : proof_edge_type_names())
        diffs.add("edge_type_counts", name, classes.proof_type_count(name), big_to_json(edge_claims.at(name)),
                  "both");
    diffs.add("edge_type_counts", "unclassified", classes.proof_type_count("unclassified"), 0, "both");
    diffs.add("edge_table_counts", "E-6", classes.count("E-6"), params.half(), "both");
    diffs.add("edge_table_counts", "E-10", classes.count("E-10"), params.n(), "both");
    diffs.add("edge_table_counts", "E-11", classes.count("E-11"), params.quarter(), "both");
    if (!structure.holds())
        diffs.add("structure_theorem", "holds", false, true, "both");

    json paper = json::object();
    for (PaperMode mode : {PaperMode::printed, PaperMode::corrected}) {
        const std::string mode_name = to_string(mode);
        json block = json::object();
        block["hosoya_coefficients"] = {big_to_json(coeffs.dis0), big_to_json(coeffs.dis1), big_to_json(coeffs.dis2)};
        block["degree_claims"] = big_map(degree_claims);
        block["edge_type_counts"] = big_map(edge_claims);

        const auto paper_rs = paper_rs_hosoya(params, mode);
        block["rs_hosoya"] = rs_poly_to_json(paper_rs);
        std::set<Rational> exponents;
        for (const auto& [e, c] : rs_poly.terms())
            exponents.insert(e);
        for (const auto& [e, c] : paper_rs.terms())
            exponents.insert(e);
        for (auto it = exponents.rbegin(); it != exponents.rend(); ++it)
            diffs.add("rs_hosoya", "x^" + to_string(*it), big_to_json(rs_poly.coefficient(*it)),
                      big_to_json(paper_rs.coefficient(*it)), mode_name);

        const auto index = paper_hosoya_index(params, mode);
        json terms = json::array();
        BigPoly implied{1};
        for (const auto& t : index.terms) {
            terms.push_back(term_to_json(t));
            if (implied.size() <= static_cast<std::size_t>(t.order))
                implied.resize(static_cast<std::size_t>(t.order) + 1, 0);
            implied[static_cast<std::size_t>(t.order)] += t.count;
        }
        json m11 = json::array();
        for (const auto& t : index.m11_terms)
            m11.push_back(term_to_json(t));
        block["hosoya_index"] = {{"total", big_to_json(index.total)},
                                 {"terms", terms},
                                 {"m11_terms", m11},
                                 {"coefficients_by_order", poly_to_json(implied)},
                                 {"warnings", index.warnings}};
        paper[mode_name] = block;

        if (rotation_poly) {
            const MatchingPolynomial rp{*rotation_poly};
            for (const auto& t : index.terms)
                if (t.family == MatchingFamily::M1)
                    diffs.add("matching_family", "M1^" + std::to_string(t.order),
                              big_to_json(rp.at(static_cast<std::size_t>(t.order))), big_to_json(t.count), mode_name);
        }
        if (full_poly) {
            const MatchingPolynomial fp{*full_poly};
            for (std::size_t i = 0; i < std::max(implied.size(), fp.coeffs.size()); ++i)
                diffs.add("matching_coefficients", "m_" + std::to_string(i), big_to_json(fp.at(i)),
                          big_to_json(i < implied.size() ? implied[i] : BigInt{0}), mode_name);
            diffs.add("hosoya_index", "Z", big_to_json(fp.hosoya_index()), big_to_json(index.total), mode_name);
        }
    }
    report["paper"] = paper;
    report["diffs"] = diffs.rows();
    timer.mark("formulas");
    return result;
}

json verify_cases(const std::vector<int>& ks, const std::vector<long long>& ps, const VerifyOptions& options)
{
    std::vector<FamilyParams> cases;
    for (int k : ks)
        for (long long p : ps) {
            FamilyParams params{k, p};
            params.validate();
            cases.push_back(params);
        }

    std::vector<std::future<CaseReport>> pending;
    for (const auto& params : cases)
        pending.push_back(std::async(std::launch::async, [&options, params] { return verify_case(params, options); }));

    json doc = json::object();
    doc["code_version"] = code_version;
    doc["configuration"] = {{"skip_index_above", options.skip_index_above},
                            {"memo_cap", options.memo_cap},
                            {"k", ks},
                            {"p", ps}};
    doc["cases"] = json::array();
    json timings = json::object();
    timings["note"] = "wall-clock seconds per stage; not deterministic";
    for (auto& f : pending) {
        CaseReport r = f.get();
        doc["cases"].push_back(std::move(r.report));
        timings[r.id] = std::move(r.timings);
    }
    doc["timings"] = timings;
    return doc;
}

}  // namespace powg
