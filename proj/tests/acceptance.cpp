// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "powg/cli.hpp"
#include "powg/distance.hpp"
#include "powg/matching.hpp"
#include "powg/paper_formulas.hpp"
#include "powg/report.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace powg;
using nlohmann::json;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string cli(const std::vector<std::string>& args, int* code = nullptr)
{
    std::ostringstream out, err;
    const int c = run_cli(args, out, err);
    if (code)
        *code = c;
    return out.str();
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

const std::vector<FamilyParams> structure_cases{{2, 3}, {2, 5}, {3, 3}};

Outcome formula_reproduction()
{
    Outcome o;
    auto eval = [](const std::string& k, const std::string& p, const std::string& which) {
        return cli({"paper", "eval", "--k", k, "--p", p, "--which", which});
    };
    o.expect(starts_with(eval("2", "3", "hosoya"), "(24, 87, 189)\n"), "hosoya coefficients at (2,3)");
    o.expect(starts_with(eval("2", "5", "hosoya"), "(40, 225, 555)\n"), "hosoya coefficients at (2,5)");

    std::map<Rational, BigInt> expected_rs;
    for (auto [e, c] : std::vector<std::pair<int, int>>{{43, 1}, {40, 10}, {34, 51}, {36, 6}, {33, 6}, {26, 3}})
        expected_rs[Rational{e}] = c;
    o.expect(paper_rs_hosoya({2, 3}, PaperMode::printed).terms() == expected_rs, "rs-Hosoya term map at (2,3)");
    o.expect(starts_with(eval("2", "3", "rs-hosoya"), "1·x^43 + 10·x^40 + 6·x^36 + 51·x^34 + 6·x^33 + 3·x^26\n"),
             "rs-Hosoya CLI rendering at (2,3)");

    o.expect(eval("2", "3", "degrees") == "e: 23\nu: 17\nh1: 11\nh2: 1\nh3: 3\n", "degree claims at (2,3)");
    o.expect(eval("2", "3", "edge-types") == "eu: 1\neh1: 10\neh2: 6\neh3: 6\nuh3: 6\nvw: 45\nyz: 3\ntotal: 77\n",
             "edge-type counts at (2,3)");
    return o;
}

Outcome oracle_ground_truth()
{
    Outcome o;
    const auto family = build_power_graph(build_family({2, 3}));
    o.expect(hosoya_polynomial(family).counts == std::vector<std::uint64_t>{24, 77, 199}, "BFS Hosoya polynomial");
    o.expect(build_power_graph(build_cyclic(12)).edge_count() == 56, "|E(P(Z_12))|");

    VerifyOptions options;
    options.skip_index_above = 0;
    const auto report = verify_case({2, 3}, options).report;
    std::vector<std::tuple<std::string, json, json>> hosoya_rows;
    bool degree_u = false;
    for (const auto& row : report["diffs"]) {
        if (row["invariant"] == "hosoya_coefficients")
            hosoya_rows.emplace_back(row["location"], row["oracle"], row["paper"]);
        if (row["invariant"] == "degrees" && row["location"] == "deg(u)")
            degree_u = row["oracle"] == 15 && row["paper"] == 17;
    }
    o.expect(hosoya_rows == std::vector<std::tuple<std::string, json, json>>{{"dis1", 77, 87}, {"dis2", 199, 189}},
             "Hosoya diff rows are exactly dis1 and dis2");
    o.expect(degree_u, "deg(u) diff row 15 vs 17");
    return o;
}

void conservation_check(Outcome& o, const Graph& g, const std::string& name)
{
    const auto n = g.size();
    const auto h = hosoya_polynomial(g);
    std::uint64_t total = h.unreachable_pairs;
    for (auto c : h.counts)
        total += c;
    o.expect(total == n + n * (n - 1) / 2, name + ": pair conservation");
    o.expect(h.at(1) == oracle::count_edges_by_pairs(g), name + ": dis1 = |E|");
    if (h.unreachable_pairs == 0)
        o.expect(rs_hosoya_polynomial(g).coefficient_total() == g.edge_count(), name + ": rs coefficient sum");
}

Outcome conservation_suite()
{
    Outcome o;
    std::mt19937_64 rng{2024};
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_real_distribution<double> density(0.05, 0.9);
    for (int t = 0; t < 200; ++t)
        conservation_check(o, oracle::random_graph(size(rng), density(rng), rng), "random graph " + std::to_string(t));
    for (std::size_t n = 1; n <= 30; ++n)
        conservation_check(o, build_power_graph(build_cyclic(n)), "P(Z_" + std::to_string(n) + ")");
    return o;
}

Outcome engine_vs_brute_force()
{
    Outcome o;
    std::mt19937_64 rng{4242};
    std::uniform_int_distribution<std::size_t> size(1, 10);
    std::uniform_real_distribution<double> density(0.1, 0.95);
    for (int t = 0; t < 200; ++t) {
        const auto g = oracle::random_graph(size(rng), density(rng), rng);
        o.expect(matching_polynomial(g) == brute_force_matchings(g), "random graph " + std::to_string(t));
    }
    for (std::size_t n = 1; n <= 14; ++n) {
        const auto g = build_power_graph(build_cyclic(n));
        o.expect(matching_polynomial(g) == brute_force_matchings(g), "P(Z_" + std::to_string(n) + ")");
    }
    std::uniform_int_distribution<std::size_t> rec_size(2, 14);
    int checked = 0;
    while (checked < 50) {
        const auto g = oracle::random_graph(rec_size(rng), 0.5, rng);
        const auto edges = g.edges();
        if (edges.empty())
            continue;
        const auto e = edges[rng() % edges.size()];
        o.expect(hosoya_index(g) ==
                     hosoya_index(oracle::without_edge(g, e)) + hosoya_index(oracle::without_vertices(g, e.first, e.second)),
                 "edge recurrence " + std::to_string(checked));
        ++checked;
    }
    return o;
}

Outcome telephone_numbers()
{
    Outcome o;
    const std::vector<long long> expected{1, 2, 4, 10, 26, 76, 232, 764};
    for (std::size_t n = 1; n <= 8; ++n)
        o.expect(hosoya_index(complete_graph(n)) == expected[n - 1], "Z(K_" + std::to_string(n) + ")");
    for (long long n = 1; n <= 12; ++n) {
        const auto brute = brute_force_matchings(complete_graph(static_cast<std::size_t>(n)));
        for (long long i = 0; 2 * i <= n; ++i) {
            const auto m = brute.at(static_cast<std::size_t>(i));
            o.expect(complete_graph_matchings(n, i, PaperMode::corrected) == m,
                     "corrected m_" + std::to_string(i) + "(K_" + std::to_string(n) + ")");
            if (i >= 1 && i <= 2)
                o.expect(complete_graph_matchings(n, i, PaperMode::printed) == m,
                         "printed m_" + std::to_string(i) + "(K_" + std::to_string(n) + ")");
        }
    }
    o.expect(complete_graph_matchings(12, 3, PaperMode::printed) == 27720, "printed (12, 3) = 27720");
    o.expect(complete_graph_matchings(12, 3, PaperMode::corrected) == 13860, "corrected (12, 3) = 13860");
    return o;
}

Outcome structure_theorem()
{
    Outcome o;
    for (const auto& params : structure_cases) {
        const auto grp = build_family(params);
        const auto rep = verify_structure_theorem(build_power_graph(grp), partition(grp, params));
        const std::string name = "(" + std::to_string(params.k) + "," + std::to_string(params.p) + ")";
        o.expect(rep.cover && rep.disjoint, name + ": cover and disjointness");
        o.expect(rep.total_edges ==
                     build_power_graph(build_cyclic(static_cast<std::size_t>(params.n()))).edge_count() +
                         static_cast<std::size_t>(params.half() + 5 * params.quarter()),
                 name + ": count identity");
        o.expect(rep.holds(), name + ": full check");
    }
    return o;
}

Outcome full_case_verification()
{
    Outcome o;
    int code = -1;
    const auto text = cli({"verify", "--k", "2", "--p", "3", "--no-cache"}, &code);
    o.expect(code == exit_ok, "verify exit status");
    if (!o.ok)
        return o;
    const auto doc = json::parse(text);
    const auto& c = doc["cases"].at(0);
    const auto& oracle_block = c["oracle"];

    // independent enumeration of every matching of the 24-vertex graph
    const auto counts = oracle::enumerate_matchings(build_power_graph(build_family({2, 3})));
    std::uint64_t z = 0;
    for (auto m : counts)
        z += m;
    o.expect(oracle_block["hosoya_index"] == z, "oracle Z equals exhaustive enumeration");
    o.expect(oracle_block["matching_polynomial"] == json(counts), "matching polynomial equals enumeration");
    o.expect(oracle_block["hosoya_index_crosscheck"]["agrees"] == true &&
                 oracle_block["hosoya_index_crosscheck"]["hosoya_index"] == z,
             "pivot-order cross-check");
    for (const std::string mode : {"printed", "corrected"}) {
        const auto& idx = c["paper"][mode]["hosoya_index"];
        o.expect(idx["total"] == paper_hosoya_index({2, 3}, parse_paper_mode(mode)).total.convert_to<long long>(),
                 mode + " total present");
        o.expect(!idx["terms"].empty() && !idx["m11_terms"].empty(), mode + " per-family breakdown present");
        bool z_row = false;
        for (const auto& row : c["diffs"])
            if (row["invariant"] == "hosoya_index" && row["mode"] == mode)
                z_row = row["oracle"] == z && row["paper"] == idx["total"];
        o.expect(z_row, mode + " oracle-vs-total row");
    }
    return o;
}

Outcome diameter_and_rs()
{
    Outcome o;
    for (const auto& params : structure_cases) {
        const auto g = build_power_graph(build_family(params));
        const std::string name = "(" + std::to_string(params.k) + "," + std::to_string(params.p) + ")";
        o.expect(diameter(g) == 2u, name + ": diameter 2");
        for (Vertex v = 0; v < g.size(); ++v)
            o.expect(reciprocal_status(g, v) == reciprocal_status_diameter_two(g, v),
                     name + ": rs closed form at vertex " + std::to_string(v));
    }
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        std::string name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 formula reproduction", 1, formula_reproduction},
        {"2 oracle ground truth", 1, oracle_ground_truth},
        {"3 conservation suite", 10, conservation_suite},
        {"4 matching engine vs brute force", 30, engine_vs_brute_force},
        {"5 telephone numbers and K_n closed form", 10, telephone_numbers},
        {"6 structure theorem", 5, structure_theorem},
        {"7 full-case verification", 60, full_case_verification},
        {"8 diameter and rs closed form", 5, diameter_and_rs},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        }
        catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string{"exception: "} + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && seconds >= c.limit_seconds) {
            outcome.ok = false;
            outcome.detail = "over the time limit";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (outcome.ok ? "PASS" : "FAIL") << "  criterion " << c.name << "  (" << seconds << " s, limit "
             << c.limit_seconds << " s)";
        if (!outcome.ok)
            line << "  " << outcome.detail;
        std::cout << line.str() << std::endl;
        failures += outcome.ok ? 0 : 1;
    }
    std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
