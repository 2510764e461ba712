// Command-line front end: generators, checks, searches, suites and format conversion.
//
// Exit codes: 0 pass or witness found, 1 definite negative, 2 budget exhausted,
// 3 usage or parse error.

#include <xminor/xminor.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace xminor;
using json = nlohmann::json;

namespace {

constexpr int kPass = 0, kNegative = 1, kBudget = 2, kUsage = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

Multigraph load(const std::string& path) { return read_graph(slurp(path)); }

std::vector<VertexId> parse_ids(const std::string& text)
{
    std::vector<VertexId> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad id list '" + text + "'");
        }
    }
    return out;
}

std::array<VertexId, 3> parse_triple(const std::string& text)
{
    const auto ids = parse_ids(text);
    if (ids.size() != 3)
        throw UsageError("expected three comma-separated vertices, got '" + text + "'");
    return {ids[0], ids[1], ids[2]};
}

json witness_json(const HomeoEmbedding& eta)
{
    json vm = json::object(), em = json::object();
    for (auto [a, b] : eta.vertex_map)
        vm[std::to_string(a)] = b;
    for (const auto& [e, p] : eta.edge_map)
        em[std::to_string(e)] = p;
    return {{"vertex_map", vm}, {"edge_map", em}};
}

json witness_json(const MinorModel& m)
{
    json bs = json::object(), ea = json::object();
    for (const auto& [v, s] : m.branch_sets)
        bs[std::to_string(v)] = s;
    for (auto [e, h] : m.edge_assign)
        ea[std::to_string(e)] = h;
    return {{"branch_sets", bs}, {"edge_assign", ea}};
}

json witness_json(const CrossingCertificate& c)
{
    json pairs = json::array();
    for (auto [e, f] : c.pairs)
        pairs.push_back({e, f});
    return {{"level", c.level}, {"pairs", pairs}, {"embedding", to_json(c.final_embedding)}};
}

json witness_json(const Tripod& t)
{
    json triads = json::array();
    for (const auto& tr : t.triads)
        triads.push_back({{"center", tr.center}, {"legs", tr.legs}});
    return {{"feet", t.u}, {"ends", t.v}, {"paths", t.paths}, {"triads", triads}};
}

json witness_json(const CycleWitness& w)
{
    json j{{"kind", to_string(w.kind)}, {"cycle", w.cycle}, {"ins", w.ins}};
    if (w.f)
        j["f"] = *w.f;
    if (w.kind == CycleKind::Flexible)
        j["z"] = w.z;
    return j;
}

int emit(const json& j, int code)
{
    std::cout << j.dump(2) << "\n";
    return code;
}

LabeledGraph family(const std::string& name, int k, int k2)
{
    if (name == "wheel" || name == "W")
        return wheel(k);
    if (name == "alt-double-wheel" || name == "A")
        return alt_double_wheel(k);
    if (name == "alt-double-wheel-hub-edge" || name == "B")
        return alt_double_wheel_with_hub_edge(k);
    if (name == "ladder" || name == "L")
        return ladder(k);
    if (name == "w-prime" || name == "W'")
        return w_prime(k);
    if (name == "circular-ladder" || name == "O")
        return circular_ladder(k);
    if (name == "mobius-ladder" || name == "M")
        return mobius_ladder(k);
    if (name == "complete-bipartite")
        return complete_bipartite(k, k2 > 0 ? k2 : k);
    if (name == "k4k")
        return k4k(k);
    if (name == "k4k-split")
        return k4k_split(k);
    if (name == "distance-chords")
        return cycle_with_distance_k_chords(k);
    if (name == "two-hubs")
        return cycle_plus_two_hubs(k);
    if (name == "a4-gadget")
        return a4_gadget();
    if (name == "complete")
        return {complete_graph(k), {}, {}};
    if (name == "cycle")
        return {cycle_graph(k), {}, {}};
    if (name == "path")
        return {path_graph(k), {}, {}};
    throw UsageError("unknown generator '" + name + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graph containment, crossing and structure toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    int scale = 0;
    std::size_t budget = 0;
    int workers = 1;
    std::string format = "json";
    auto add_common = [&](CLI::App* c) {
        c->add_option("--seed", seed, "random seed");
        c->add_option("--scale", scale, "size parameter");
        c->add_option("--budget", budget, "search budget (0 = default)");
        c->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);
        c->add_option("--format", format, "output graph format: json, graph6, dot")
            ->check(CLI::IsMember({"json", "graph6", "g6", "dot"}));
    };

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph");
    std::string gen_name;
    int gen_k2 = 0;
    bool gen_chords = false;
    gen->add_option("generator", gen_name,
                    "wheel, alt-double-wheel, alt-double-wheel-hub-edge, ladder, w-prime, circular-ladder, "
                    "mobius-ladder, complete-bipartite, k4k, k4k-split, distance-chords, two-hubs, a4-gadget, "
                    "complete, cycle, path, path-fan, chain")
        ->required();
    gen->add_option("--second", gen_k2, "second side for complete-bipartite");
    gen->add_flag("--chords", gen_chords, "path-fan: add nested chords");
    add_common(gen);

    // check
    auto* check = app.add_subcommand("check", "evaluate a structural predicate");
    std::string check_what, check_file, check_cycle, check_boundary = "0,1,2";
    int check_t = 5, check_k = 3;
    check->add_option("predicate", check_what,
                      "planar, connected, almost4, shallow, internal3, robust, flexible, robust-or-flexible, tripod")
        ->required();
    check->add_option("graph", check_file, "graph file (json, graph6 or dot; - for stdin)")->required();
    check->add_option("--t", check_t, "shallow: threshold t");
    check->add_option("--k", check_k, "connected: connectivity k");
    check->add_option("--cycle", check_cycle, "robust/flexible: comma-separated edge ids");
    check->add_option("--boundary,--feet", check_boundary, "three comma-separated vertices");
    add_common(check);

    // find-subdivision / find-minor
    std::string pattern_file, host_file;
    auto* fsub = app.add_subcommand("find-subdivision", "find a subdivision of PATTERN in HOST");
    fsub->add_option("pattern", pattern_file)->required();
    fsub->add_option("host", host_file)->required();
    add_common(fsub);
    auto* fmin = app.add_subcommand("find-minor", "find PATTERN as a minor of HOST");
    fmin->add_option("pattern", pattern_file)->required();
    fmin->add_option("host", host_file)->required();
    add_common(fmin);

    // crossing / xminimal
    std::string graph_file;
    int max_crossings = 3;
    auto* cross = app.add_subcommand("crossing", "smallest c <= --max with a drawing of c crossings");
    cross->add_option("graph", graph_file)->required();
    cross->add_option("--max", max_crossings, "largest level to try (0..3)")->check(CLI::Range(0, 3));
    add_common(cross);
    auto* xmin = app.add_subcommand("xminimal", "check the four X-minimality conditions");
    xmin->add_option("graph", graph_file)->required();
    add_common(xmin);

    // suite
    std::vector<std::string> suite_names;
    bool heavy = false, list = false;
    auto* suite = app.add_subcommand("suite", "run verification suites");
    suite->add_option("ids", suite_names, "suite ids, or 'all'");
    suite->add_flag("--heavy", heavy, "with 'all', include the slow suites");
    suite->add_flag("--list", list, "list suites and exit");
    add_common(suite);

    // convert
    std::string out_file;
    auto* conv = app.add_subcommand("convert", "convert between json, graph6 and dot");
    conv->add_option("graph", graph_file)->required();
    conv->add_option("-o,--output", out_file, "output file (default stdout)");
    add_common(conv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const GraphFormat fmt = parse_format(format);

        if (gen->parsed()) {
            Multigraph g;
            if (gen_name == "path-fan")
                g = path_fan_instance(scale > 0 ? scale : 8, seed, gen_chords).graph;
            else if (gen_name == "chain")
                g = random_chain_instance(scale > 0 ? scale : 16, seed).graph;
            else
                g = family(gen_name, scale > 0 ? scale : 4, gen_k2).graph;
            std::cout << write_graph(g, fmt);
            return kPass;
        }

        if (check->parsed()) {
            const Multigraph g = load(check_file);
            if (check_what == "planar") {
                const bool yes = is_planar(g);
                return emit({{"planar", yes}}, yes ? kPass : kNegative);
            }
            if (check_what == "connected") {
                const bool yes = is_k_connected(g, check_k);
                return emit({{"k", check_k}, {"connected", yes}}, yes ? kPass : kNegative);
            }
            if (check_what == "almost4") {
                const bool yes = is_almost_4_connected(g);
                return emit({{"almost_4_connected", yes}}, yes ? kPass : kNegative);
            }
            if (check_what == "shallow") {
                const auto r = is_t_shallow(g, check_t);
                json j{{"t", check_t}, {"shallow", r.shallow}};
                if (r.violation)
                    j["violation"] = {{"a", r.violation->side_a}, {"b", r.violation->side_b}};
                return emit(j, r.shallow ? kPass : kNegative);
            }
            const auto x = parse_triple(check_boundary);
            if (check_what == "internal3") {
                const bool yes = internally_3_connected(g, x[0], x[1], x[2]);
                return emit({{"internally_3_connected", yes}}, yes ? kPass : kNegative);
            }
            if (check_what == "tripod") {
                const auto r = find_tripod(g, x[0], x[1], x[2], budget ? budget : 20'000'000);
                if (auto* t = std::get_if<Tripod>(&r))
                    return emit({{"outcome", "tripod"}, {"tripod", witness_json(*t)}}, kPass);
                return emit({{"outcome", "disk-embedding"}, {"embedding", to_json(std::get<PlaneGraph>(r))}}, kPass);
            }
            const auto ctx = make_context(g, x);
            if (check_what == "robust" || check_what == "flexible") {
                if (check_cycle.empty())
                    throw UsageError("--cycle is required");
                const auto c = parse_ids(check_cycle);
                if (check_what == "robust") {
                    const auto w = is_robust_cycle(ctx, c);
                    json j{{"robust", w.has_value()}};
                    if (w)
                        j["f"] = w->f;
                    return emit(j, w ? kPass : kNegative);
                }
                const auto w = flexible_analysis(ctx, c);
                json j{{"flexible", w.has_value()}};
                if (w)
                    j["z"] = w->z;
                return emit(j, w ? kPass : kNegative);
            }
            if (check_what == "robust-or-flexible") {
                const auto w = find_robust_or_flexible(ctx);
                if (!w)
                    return emit({{"found", false}}, kNegative);
                return emit({{"found", true}, {"witness", witness_json(*w)}}, kPass);
            }
            throw UsageError("unknown predicate '" + check_what + "'");
        }

        if (fsub->parsed()) {
            SubdivisionOptions opt;
            if (budget)
                opt.budget = budget;
            const auto eta = find_subdivision(load(pattern_file), load(host_file), opt);
            if (!eta)
                return emit({{"found", false}}, kNegative);
            return emit({{"found", true}, {"witness", witness_json(*eta)}}, kPass);
        }

        if (fmin->parsed()) {
            MinorOptions opt;
            if (budget)
                opt.budget = budget;
            const auto m = find_minor(load(pattern_file), load(host_file), opt);
            if (!m)
                return emit({{"found", false}}, kNegative);
            return emit({{"found", true}, {"witness", witness_json(*m)}}, kPass);
        }

        if (cross->parsed()) {
            const Multigraph g = load(graph_file);
            CrossingOptions opt;
            if (budget)
                opt.budget = budget;
            for (int c = 0; c <= max_crossings; ++c)
                if (auto cert = crossing_le(g, c, opt))
                    return emit({{"crossings_at_most", c}, {"certificate", witness_json(*cert)}}, kPass);
            return emit({{"crossings_greater_than", max_crossings}}, kNegative);
        }

        if (xmin->parsed()) {
            const Multigraph g = load(graph_file);
            CrossingOptions opt;
            if (budget)
                opt.budget = budget;
            const auto r = is_x_minimal(g, opt);
            json j{{"x_minimal", r.verdict}};
            if (r.failed_condition)
                j["failed_condition"] = *r.failed_condition;
            if (r.witness_edge)
                j["witness_edge"] = *r.witness_edge;
            if (r.witness_vertex)
                j["witness_vertex"] = *r.witness_vertex;
            if (r.certificate)
                j["certificate"] = witness_json(*r.certificate);
            return emit(j, r.verdict ? kPass : kNegative);
        }

        if (suite->parsed()) {
            if (list) {
                for (const auto& s : suite_catalog())
                    std::cout << s.id << (s.heavy ? " (heavy)" : "") << "\n    " << s.description << "\n";
                return kPass;
            }
            if (suite_names.empty())
                throw UsageError("no suite given (try --list)");
            if (suite_names.size() == 1 && suite_names[0] == "all")
                suite_names = suite_ids(heavy);
            json reports = json::array();
            bool negative = false, out_of_budget = false;
            for (const auto& id : suite_names) {
                const auto r = run_suite(id, {seed, scale, workers});
                for (const auto& f : r.failures)
                    (f.kind == "budget" ? out_of_budget : negative) = true;
                reports.push_back(r.to_json());
                std::cerr << id << ": " << r.instances_run << " instances, " << r.failures.size() << " failures\n";
            }
            const int code = negative ? kNegative : out_of_budget ? kBudget : kPass;
            return emit(suite_names.size() == 1 ? reports[0] : reports, code);
        }

        if (conv->parsed()) {
            const std::string out = write_graph(load(graph_file), fmt);
            if (out_file.empty()) {
                std::cout << out;
            } else {
                std::ofstream f(out_file, std::ios::binary);
                if (!f)
                    throw UsageError("cannot write " + out_file);
                f << out;
            }
            return kPass;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const UnknownSuite& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
