#include "powg/cli.hpp"

#include "powg/distance.hpp"
#include "powg/errors.hpp"
#include "powg/matching.hpp"
#include "powg/paper_formulas.hpp"
#include "powg/power_graph.hpp"
#include "powg/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace powg {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GroupSource {
    std::string family;
    int k = 0;
    long long p = 0;
    std::size_t cyclic = 0;
    std::string cayley;

    void attach(CLI::App* app)
    {
        app->add_option("--family", family, "Group family (sdl)");
        app->add_option("--k", k, "Family parameter k >= 2");
        app->add_option("--p", p, "Family parameter p, an odd prime");
        app->add_option("--cyclic", cyclic, "Cyclic group Z_N");
        app->add_option("--cayley", cayley, "Cayley-table file");
    }

    std::optional<FamilyParams> family_params() const
    {
        if (family.empty())
            return std::nullopt;
        return FamilyParams{k, p};
    }

    FiniteGroup build(const CLI::App* app) const
    {
        const bool has_family = !family.empty();
        const bool has_cyclic = app->count("--cyclic") > 0;
        const bool has_cayley = !cayley.empty();
        if (has_family + has_cyclic + has_cayley != 1)
            throw UsageError{"select exactly one of --family, --cyclic, --cayley"};
        if (has_family) {
            if (family != "sdl")
                throw UsageError{"unknown family '" + family + "' (only sdl is supported)"};
            if (!app->count("--k") || !app->count("--p"))
                throw UsageError{"--family sdl requires --k and --p"};
            return build_family(FamilyParams{k, p});
        }
        if (has_cyclic)
            return build_cyclic(cyclic);
        std::ifstream in{cayley, std::ios::binary};
        if (!in)
            throw InvalidInput{"cannot read " + cayley};
        std::stringstream buffer;
        buffer << in.rdbuf();
        return load_cayley_table(buffer.str());
    }
};

MatchingOptions matching_options_from_env()
{
    MatchingOptions options;
    if (const char* cap = std::getenv("POWG_MEMO_CAP"); cap && *cap) {
        try {
            options.memo_cap = static_cast<std::size_t>(std::stoull(cap));
        }
        catch (const std::exception&) {
            throw UsageError{"POWG_MEMO_CAP must be a non-negative integer"};
        }
    }
    return options;
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file{path, std::ios::binary};
    if (!file)
        throw InvalidInput{"cannot write " + path};
    file << text;
}

std::string group_info(const FiniteGroup& g)
{
    std::ostringstream out;
    out << "order: " << g.order() << '\n';
    out << "associativity check: " << g.associativity_check() << '\n';
    std::map<std::uint64_t, std::size_t> orders;
    for (Element x = 0; x < g.order(); ++x)
        ++orders[element_order(g, x)];
    out << "element orders:";
    for (auto [o, c] : orders)
        out << ' ' << o << ':' << c;
    out << '\n';
    if (g.family()) {
        const auto part = partition(g, *g.family());
        out << "partition sizes (H0, H1, H2, H3): (" << part.h0.size() << ", " << part.h1.size() << ", "
            << part.h2.size() << ", " << part.h3.size() << ")\n";
        out << "u: " << g.label(part.u) << '\n';
    }
    return out.str();
}

std::string render_terms(const std::vector<MatchingFamilyTerm>& terms)
{
    std::ostringstream out;
    for (const auto& t : terms) {
        out << to_string(t.family) << '^' << t.order << " = " << to_string(t.count) << '\n';
        for (const auto& w : t.warnings)
            out << "  warning: " << w << '\n';
    }
    return out.str();
}

std::string paper_eval(const FamilyParams& params, const std::string& which, PaperMode mode)
{
    std::ostringstream out;
    if (which == "hosoya") {
        const auto c = paper_hosoya_coeffs(params);
        out << '(' << to_string(c.dis0) << ", " << to_string(c.dis1) << ", " << to_string(c.dis2) << ")\n";
        out << to_string(c.dis0) << " + " << to_string(c.dis1) << "x + " << to_string(c.dis2) << "x^2\n";
    }
    else if (which == "rs-hosoya") {
        const auto poly = paper_rs_hosoya(params, mode);
        out << poly.render() << '\n';
        out << "terms: " << poly.terms().size() << ", coefficient total: " << to_string(poly.coefficient_total())
            << '\n';
    }
    else if (which == "degrees") {
        for (const char* cls : {"e", "u", "h1", "h2", "h3"})
            out << cls << ": " << to_string(paper_degree_claims(params).at(cls)) << '\n';
    }
    else if (which == "edge-types") {
        const auto counts = paper_edge_type_counts(params);
        BigInt total = 0;
        for (const auto& name : proof_edge_type_names()) {
            out << name << ": " << to_string(counts.at(name)) << '\n';
            total += counts.at(name);
        }
        out << "total: " << to_string(total) << '\n';
    }
    else {
        const auto index = paper_hosoya_index(params, mode);
        out << "total: " << to_string(index.total) << '\n';
        out << render_terms(index.terms);
        out << "M11 cases:\n" << render_terms(index.m11_terms);
    }
    return out.str();
}

std::string invariant_text(const std::string& which, const Graph& graph)
{
    std::ostringstream out;
    if (which == "hosoya") {
        const auto dist = hosoya_polynomial(graph);
        out << dist.render() << '\n';
        if (dist.unreachable_pairs)
            out << "unreachable pairs: " << dist.unreachable_pairs << '\n';
    }
    else if (which == "rs-hosoya")
        out << rs_hosoya_polynomial(graph).render() << '\n';
    else if (which == "wiener")
        out << wiener_index(graph) << '\n';
    else if (which == "matching-poly") {
        const auto mp = matching_polynomial(graph, matching_options_from_env());
        out << "m=[";
        for (std::size_t i = 0; i < mp.coeffs.size(); ++i)
            out << (i ? "," : "") << to_string(mp.coeffs[i]);
        out << "]\n" << mp.render() << '\n' << "Z=" << to_string(mp.hosoya_index()) << '\n';
    }
    else
        out << to_string(hosoya_index(graph, matching_options_from_env())) << '\n';
    return out.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Power graphs of finite groups: exact Hosoya invariants and closed-form checks", "powg"};
    app.require_subcommand(1);

    auto* group_cmd = app.add_subcommand("group", "Inspect a group");
    GroupSource group_src;
    group_src.attach(group_cmd);
    std::string group_action;
    group_cmd->add_option("action", group_action, "Action")->required()->check(CLI::IsMember({"info"}));

    auto* graph_cmd = app.add_subcommand("graph", "Export the power graph");
    GroupSource graph_src;
    graph_src.attach(graph_cmd);
    std::string graph_format;
    std::string graph_out;
    graph_cmd->add_option("--format", graph_format, "dot or edges")->required()->check(CLI::IsMember({"dot", "edges"}));
    graph_cmd->add_option("-o,--output", graph_out, "Output file");

    auto* inv_cmd = app.add_subcommand("invariant", "Compute an invariant of the power graph");
    GroupSource inv_src;
    inv_src.attach(inv_cmd);
    std::string inv_name;
    std::string inv_out;
    inv_cmd->add_option("name", inv_name, "Invariant")
        ->required()
        ->check(CLI::IsMember({"hosoya", "rs-hosoya", "wiener", "matching-poly", "hosoya-index"}));
    inv_cmd->add_option("-o,--output", inv_out, "Output file");

    auto* paper_cmd = app.add_subcommand("paper", "Evaluate published closed forms");
    paper_cmd->require_subcommand(1);
    auto* eval_cmd = paper_cmd->add_subcommand("eval", "Evaluate one closed form at (k, p)");
    int eval_k = 0;
    long long eval_p = 0;
    std::string eval_which;
    std::string eval_mode = "printed";
    std::string eval_out;
    eval_cmd->add_option("--k", eval_k, "k >= 2")->required();
    eval_cmd->add_option("--p", eval_p, "odd prime p")->required();
    eval_cmd->add_option("--which", eval_which, "Which closed form")
        ->required()
        ->check(CLI::IsMember({"hosoya", "rs-hosoya", "index", "degrees", "edge-types"}));
    eval_cmd->add_option("--mode", eval_mode, "printed or corrected")->check(CLI::IsMember({"printed", "corrected"}));
    eval_cmd->add_option("-o,--output", eval_out, "Output file");

    auto* verify_cmd = app.add_subcommand("verify", "Compare oracle invariants with the closed forms");
    std::vector<int> verify_k;
    std::vector<long long> verify_p;
    std::string verify_out;
    std::size_t skip_above = VerifyOptions{}.skip_index_above;
    bool no_cache = false;
    verify_cmd->add_option("--k", verify_k, "k values, comma separated")->required()->delimiter(',');
    verify_cmd->add_option("--p", verify_p, "p values, comma separated")->required()->delimiter(',');
    verify_cmd->add_option("--out", verify_out, "Report file (JSON)");
    verify_cmd->add_option("--skip-index-above", skip_above, "Skip matching-engine stages above this many vertices");
    verify_cmd->add_flag("--no-cache", no_cache, "Do not read or write the result cache");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (group_cmd->parsed()) {
            out << group_info(group_src.build(group_cmd));
        }
        else if (graph_cmd->parsed()) {
            const auto graph = build_power_graph(graph_src.build(graph_cmd));
            emit(export_graph(graph, graph_format == "dot" ? ExportFormat::dot : ExportFormat::edge_list), graph_out,
                 out);
        }
        else if (inv_cmd->parsed()) {
            const auto graph = build_power_graph(inv_src.build(inv_cmd));
            emit(invariant_text(inv_name, graph), inv_out, out);
        }
        else if (eval_cmd->parsed()) {
            emit(paper_eval(FamilyParams{eval_k, eval_p}, eval_which, parse_paper_mode(eval_mode)), eval_out, out);
        }
        else if (verify_cmd->parsed()) {
            VerifyOptions options;
            options.skip_index_above = skip_above;
            options.memo_cap = matching_options_from_env().memo_cap;
            std::optional<ResultCache> cache;
            if (!no_cache) {
                cache.emplace(ResultCache::default_directory());
                options.cache = &*cache;
            }
            const auto doc = verify_cases(verify_k, verify_p, options);
            emit(doc.dump(2) + "\n", verify_out, out);
            if (!verify_out.empty())
                err << "wrote " << doc["cases"].size() << " case(s) to " << verify_out << '\n';
        }
    }
    catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_invalid_input;
    }
    catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_resource_limit;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_input;
    }
    return exit_ok;
}

}  // namespace powg
