#pragma once

#include "connectivity.hpp"
#include "containment.hpp"
#include "crossing.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "instances.hpp"
#include "io.hpp"
#include "structure.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace xminor {

// Reproducible verification runs. A suite expands (seed, scale) into a list of
// named instances, checks each one, and reports every failed assertion with
// enough data to replay the instance on its own.

struct SuiteFailure {
    std::string instance;      // instance id, e.g. "n16/chain/007"
    std::string kind;          // "assertion", "budget" or "error"
    std::string assertion;     // what went wrong
    nlohmann::json descriptor; // generator parameters and the graph itself
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int scale = 0;
    std::size_t instances_run = 0;
    std::vector<SuiteFailure> failures;

    bool passed() const { return failures.empty(); }

    nlohmann::json to_json() const
    {
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : failures)
            fs.push_back({{"instance", f.instance}, {"kind", f.kind}, {"assertion", f.assertion},
                          {"descriptor", f.descriptor}});
        return {{"suite", suite},         {"seed", seed},     {"scale", scale},
                {"instances_run", instances_run}, {"failures", fs}, {"passed", passed()}};
    }
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int scale = 0; // 0 picks the suite's default
    int workers = 1;
};

class UnknownSuite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Collects failed expectations for one instance.
class Checker {
public:
    explicit Checker(nlohmann::json descriptor) : descriptor_(std::move(descriptor)) {}

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures_.push_back({"", "assertion", what, descriptor_});
    }
    void fail(const std::string& kind, const std::string& what) { failures_.push_back({"", kind, what, descriptor_}); }
    void describe(const std::string& key, nlohmann::json value) { descriptor_[key] = std::move(value); }

    std::vector<SuiteFailure>& failures() { return failures_; }

private:
    nlohmann::json descriptor_;
    std::vector<SuiteFailure> failures_;
};

struct SuiteTask {
    std::string id;
    nlohmann::json descriptor;
    std::function<void(Checker&)> run;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0)
{
    // splitmix64 over the combined words
    std::uint64_t z = seed ^ (a * 0x9E3779B97F4A7C15ull) ^ (b * 0xC2B2AE3D27D4EB4Full);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::string pad(std::size_t i)
{
    std::string s = std::to_string(i);
    return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

inline SuiteReport execute(const std::string& suite, const SuiteOptions& opt, int scale, std::vector<SuiteTask> tasks)
{
    std::vector<std::vector<SuiteFailure>> results(tasks.size());
    auto run_one = [&](std::size_t i) {
        Checker c(tasks[i].descriptor);
        try {
            tasks[i].run(c);
        } catch (const BudgetExceeded& e) {
            c.fail("budget", e.what());
        } catch (const std::exception& e) {
            c.fail("error", e.what());
        }
        for (auto& f : c.failures())
            f.instance = tasks[i].id;
        results[i] = std::move(c.failures());
    };
    const int workers = std::max(1, opt.workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next++) < tasks.size();)
                    run_one(i);
            });
        for (auto& t : pool)
            t.join();
    }
    SuiteReport r;
    r.suite = suite;
    r.seed = opt.seed;
    r.scale = scale;
    r.instances_run = tasks.size();
    std::vector<std::size_t> order(tasks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return tasks[a].id < tasks[b].id; });
    for (std::size_t i : order)
        for (auto& f : results[i])
            r.failures.push_back(std::move(f));
    return r;
}

inline nlohmann::json graph_descriptor(const std::string& name, const Multigraph& g)
{
    return {{"name", name}, {"graph", to_json(g)}};
}

// ---- families ---------------------------------------------------------------

inline std::vector<SuiteTask> family_tasks(int max_k)
{
    std::vector<SuiteTask> tasks;
    for (int k = 3; k <= max_k; ++k) {
        const std::size_t K = static_cast<std::size_t>(k);
        struct Spec {
            std::string name;
            LabeledGraph g;
            std::size_t n, m;
            bool three_connected, almost4;
        };
        const bool a4 = k >= 4;
        std::vector<Spec> specs{
            {"W", wheel(k), K + 1, 2 * K, true, false},
            {"A", alt_double_wheel(k), 2 * K + 2, 4 * K, false, a4},
            {"B", alt_double_wheel_with_hub_edge(k), 2 * K + 2, 4 * K + 1, false, false},
            {"L", ladder(k), 2 * K, 3 * K - 2, false, false},
            {"W'", w_prime(k), 2 * K - 2, 3 * K - 3, true, false},
            {"O", circular_ladder(k), 2 * K, 3 * K, false, a4},
            {"M", mobius_ladder(k), 2 * K, 3 * K, false, a4},
            {"K3k", complete_bipartite(3, k), K + 3, 3 * K, true, false},
            {"K4k", k4k(k), K + 4, 4 * K, false, a4},
            {"K'4k", k4k_split(k), 2 * K + 4, 5 * K, false, a4},
            {"distance-k chords", cycle_with_distance_k_chords(k), 2 * K + 1, 4 * K + 2, false, false},
            {"cycle plus two hubs", cycle_plus_two_hubs(k), K + 2, 3 * K + 1, false, false},
        };
        for (auto& s : specs) {
            SuiteTask t;
            t.id = "k" + pad(K) + "/" + s.name;
            t.descriptor = graph_descriptor(s.name + " k=" + std::to_string(k), s.g.graph);
            t.run = [s](Checker& c) {
                c.expect(s.g.graph.num_vertices() == s.n, "vertex count " + std::to_string(s.g.graph.num_vertices()) +
                                                              " != " + std::to_string(s.n));
                c.expect(s.g.graph.num_edges() == s.m,
                         "edge count " + std::to_string(s.g.graph.num_edges()) + " != " + std::to_string(s.m));
                if (s.three_connected)
                    c.expect(is_k_connected(s.g.graph, 3), "not 3-connected");
                if (s.almost4)
                    c.expect(is_almost_4_connected(s.g.graph), "not almost 4-connected");
            };
            tasks.push_back(std::move(t));
        }
    }
    return tasks;
}

// Every almost 4-connected family graph is 5-shallow.
inline std::vector<SuiteTask> shallow_tasks(int max_k)
{
    std::vector<SuiteTask> tasks;
    for (int k = 3; k <= max_k; ++k) {
        const std::vector<std::pair<std::string, Multigraph>> graphs{
            {"W", wheel(k).graph},
            {"A", alt_double_wheel(k).graph},
            {"B", alt_double_wheel_with_hub_edge(k).graph},
            {"L", ladder(k).graph},
            {"W'", w_prime(k).graph},
            {"O", circular_ladder(k).graph},
            {"M", mobius_ladder(k).graph},
            {"K3k", complete_bipartite(3, k).graph},
            {"K4k", k4k(k).graph},
            {"K'4k", k4k_split(k).graph},
            {"distance-k chords", cycle_with_distance_k_chords(k).graph},
            {"cycle plus two hubs", cycle_plus_two_hubs(k).graph},
        };
        for (const auto& [name, g] : graphs) {
            SuiteTask t;
            t.id = "k" + pad(static_cast<std::size_t>(k)) + "/" + name;
            t.descriptor = graph_descriptor(name + " k=" + std::to_string(k), g);
            t.run = [g](Checker& c) {
                if (!is_almost_4_connected(g))
                    return;
                c.describe("almost_4_connected", true);
                const auto r = is_t_shallow(g, 5);
                c.expect(r.shallow, r.violation ? "separation with separator of order " +
                                                      std::to_string(r.violation->order()) + " has no small disk side"
                                                : "not 5-shallow");
            };
            tasks.push_back(std::move(t));
        }
    }
    return tasks;
}

// ---- minors of the three outcome graphs --------------------------------------

inline std::vector<SuiteTask> outcome_minor_tasks(int k)
{
    struct Pair {
        std::string name;
        Multigraph pattern, host;
    };
    const std::vector<Pair> pairs{
        {"K4k in K'4k", k4k(k).graph, k4k_split(k).graph},
        {"distance-k chords in M", cycle_with_distance_k_chords(k).graph, mobius_ladder(2 * k + 1).graph},
        {"cycle plus two hubs in B", cycle_plus_two_hubs(2 * k).graph, alt_double_wheel_with_hub_edge(2 * k).graph},
    };
    std::vector<SuiteTask> tasks;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        SuiteTask t;
        t.id = pad(i) + "/" + p.name;
        t.descriptor = {{"name", p.name}, {"k", k}, {"pattern", to_json(p.pattern)}, {"host", to_json(p.host)}};
        t.run = [p](Checker& c) {
            const auto model = find_minor(p.pattern, p.host);
            c.expect(model.has_value(), "no minor model found");
            if (model) {
                const auto bad = minor_violation(*model);
                c.expect(!bad, "model fails verification: " + bad.value_or(""));
            }
        };
        tasks.push_back(std::move(t));
    }
    return tasks;
}

// ---- crossing gadget and X-minimal examples -------------------------------------

inline std::vector<SuiteTask> gadget_tasks()
{
    SuiteTask t;
    const auto gadget = a4_gadget();
    t.id = "a4-gadget";
    t.descriptor = graph_descriptor("A4 with subdivided rim edges joined", gadget.graph);
    t.run = [gadget](Checker& c) {
        const auto& g = gadget.graph;
        c.expect(!crossing_le(g, 1).has_value(), "drawing with one crossing found");
        std::vector<EdgeId> planar_after;
        for (const Edge& e : g.edges())
            if (is_planar(delete_edge(g, e.id)))
                planar_after.push_back(e.id);
        c.expect(planar_after.size() == 1, std::to_string(planar_after.size()) + " edges leave a planar graph");
        c.expect(planar_after.size() == 1 && planar_after[0] == gadget.edge("link"),
                 "the edge leaving a planar graph is not the hub link");
    };
    return {std::move(t)};
}

inline Multigraph doubled_path_k5()
{
    const auto k5 = complete_graph(5);
    Multigraph g = k5;
    for (const Edge& e : k5.edges()) {
        if (e.u <= 2 && e.v <= 2)
            continue;
        const auto s = subdivide_edge(g, e.id, 1);
        g = s.graph;
        for (EdgeId h : s.new_edges) {
            const Edge x = g.edge(h);
            g.add_edge(x.u, x.v);
        }
    }
    return g;
}

inline std::vector<SuiteTask> x_minimal_tasks()
{
    const auto k5 = complete_graph(5);
    struct Case {
        std::string name;
        Multigraph g;
        bool verdict;
        std::string failed;
    };
    const std::vector<Case> cases{
        {"K5", k5, false, "i"},
        {"two disjoint K5", disjoint_union(k5, k5), true, ""},
        {"three disjoint K5", disjoint_union(disjoint_union(k5, k5), k5), false, "ii"},
        {"subdivided K5 and K5", disjoint_union(subdivide_edge(k5, 0, 1).graph, k5), false, "iii"},
        {"K5 with doubled paths", doubled_path_k5(), false, "iv"},
    };
    std::vector<SuiteTask> tasks;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& cs = cases[i];
        SuiteTask t;
        t.id = pad(i) + "/" + cs.name;
        t.descriptor = graph_descriptor(cs.name, cs.g);
        t.run = [cs](Checker& c) {
            const auto r = is_x_minimal(cs.g);
            c.expect(r.verdict == cs.verdict, std::string("verdict ") + (r.verdict ? "true" : "false"));
            if (!cs.verdict)
                c.expect(r.failed_condition == cs.failed,
                         "failed condition " + r.failed_condition.value_or("none") + " != " + cs.failed);
            if (r.certificate)
                c.expect(replay_certificate(cs.g, *r.certificate), "certificate does not replay");
        };
        tasks.push_back(std::move(t));
    }
    return tasks;
}

// ---- disk instances with three boundary vertices --------------------------------

inline constexpr int kDiskInstancesPerScale = 50;
inline constexpr int kLargeInstances = 10;

/// Half path-fans (some with chords), half chains, sized near `scale` vertices.
inline std::vector<std::pair<std::string, BoundaryInstance>> disk_instances(std::uint64_t seed, int scale)
{
    std::vector<std::pair<std::string, BoundaryInstance>> out;
    for (int i = 0; i < kDiskInstancesPerScale; ++i) {
        const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(scale), static_cast<std::uint64_t>(i));
        const std::string id = "n" + pad(static_cast<std::size_t>(scale)) + "/";
        if (i % 2 == 0)
            out.emplace_back(id + "path-fan/" + pad(i), path_fan_instance(scale - 3, s, i % 4 == 0));
        else
            out.emplace_back(id + "chain/" + pad(i), random_chain_instance(scale, s));
    }
    return out;
}

inline nlohmann::json instance_descriptor(const BoundaryInstance& inst)
{
    auto d = inst.descriptor;
    d["graph"] = to_json(inst.graph);
    d["boundary"] = inst.x;
    return d;
}

inline std::vector<int> disk_scales(int scale)
{
    if (scale > 0)
        return {scale};
    return {16, 22, 28, 34, 40};
}

/// Wraps a per-context check into tasks over the generated instances.
inline std::vector<SuiteTask> disk_tasks(std::uint64_t seed, int scale,
                                         const std::function<void(const BoundaryContext&, Checker&)>& check)
{
    std::vector<SuiteTask> tasks;
    for (int s : disk_scales(scale))
        for (auto& [id, inst] : disk_instances(seed, s)) {
            SuiteTask t;
            t.id = id;
            t.descriptor = instance_descriptor(inst);
            t.run = [inst = inst, check](Checker& c) {
                const auto ctx = context_of(inst);
                check(ctx, c);
            };
            tasks.push_back(std::move(t));
        }
    return tasks;
}

inline std::string edges_text(const std::vector<EdgeId>& es)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < es.size(); ++i)
        os << (i ? "," : "") << es[i];
    return os.str();
}

inline Multigraph inner_graph(const BoundaryContext& ctx)
{
    return delete_vertices(ctx.graph(), std::vector<VertexId>(ctx.x.begin(), ctx.x.end()));
}

inline void check_nonfacial_robust(const BoundaryContext& ctx, Checker& c)
{
    for (const auto& cyc : all_cycles(inner_graph(ctx)))
        if (!is_facial(ctx.plane, cyc))
            c.expect(is_robust_cycle(ctx, cyc).has_value(), "non-facial cycle " + edges_text(cyc) + " is not robust");
}

/// Runs `then` only on instances certified to have no robust cycle.
inline void if_no_robust(const BoundaryContext& ctx, Checker& c, const std::function<void()>& then)
{
    const auto any = has_robust_cycle(ctx);
    if (!any) {
        c.fail("budget", "robust-cycle scan ran out of budget");
        return;
    }
    c.describe("robust_cycle", *any);
    if (!*any)
        then();
}

inline void check_cycle_blocks(const BoundaryContext& ctx, Checker& c)
{
    if_no_robust(ctx, c, [&] {
        const auto inner = inner_graph(ctx);
        const auto cycles = all_cycles(inner);
        for (std::size_t i = 0; i < cycles.size(); ++i)
            for (std::size_t j = i + 1; j < cycles.size(); ++j) {
                std::vector<EdgeId> common;
                std::set_intersection(cycles[i].begin(), cycles[i].end(), cycles[j].begin(), cycles[j].end(),
                                      std::back_inserter(common));
                c.expect(common.empty(), "cycles " + edges_text(cycles[i]) + " and " + edges_text(cycles[j]) +
                                             " share an edge");
            }
        for (const auto& b : blocks(inner).blocks) {
            const auto sub = restrict_to(inner, b.vertices);
            const bool small = b.vertices.size() <= 2 && b.edges.size() <= 1;
            const bool cycle = b.edges.size() == b.vertices.size() && as_cycle(inner, b.edges).has_value();
            c.expect(small || cycle, "block on " + std::to_string(b.vertices.size()) + " vertices is not a cycle");
        }
    });
}

inline void check_end_blocks(const BoundaryContext& ctx, Checker& c)
{
    if_no_robust(ctx, c, [&] {
        const auto inner = inner_graph(ctx);
        const auto bf = blocks(inner);
        std::vector<std::set<VertexId>> attach;
        for (std::size_t b = 0; b < bf.blocks.size(); ++b) {
            if (!bf.blocks[b].end_block)
                continue;
            VertexId cut = -1;
            for (auto [blk, v] : bf.incidence)
                if (blk == static_cast<int>(b))
                    cut = v;
            std::set<VertexId> n;
            for (VertexId v : bf.blocks[b].vertices)
                if (v != cut)
                    for (int i = 0; i < 3; ++i)
                        for (VertexId w : ctx.graph().neighbors(v))
                            if (w == ctx.x[i])
                                n.insert(w);
            attach.push_back(std::move(n));
        }
        for (std::size_t i = 0; i < attach.size(); ++i) {
            c.expect(attach[i].size() == 2, "end block sees " + std::to_string(attach[i].size()) + " boundary vertices");
            for (std::size_t j = i + 1; j < attach.size(); ++j) {
                std::vector<VertexId> common;
                std::set_intersection(attach[i].begin(), attach[i].end(), attach[j].begin(), attach[j].end(),
                                      std::back_inserter(common));
                c.expect(common.size() == 1, "two end blocks share " + std::to_string(common.size()) +
                                                 " boundary neighbours");
            }
        }
    });
}

inline void check_block_path(const BoundaryContext& ctx, Checker& c)
{
    if_no_robust(ctx, c, [&] {
        c.expect(blocks(inner_graph(ctx)).block_graph_is_path(), "block graph is not a path");
    });
}

/// A witness must survive re-evaluation from scratch.
inline void check_witness(const BoundaryContext& ctx, const CycleWitness& w, Checker& c)
{
    const auto ins = interior_edges(ctx.plane, w.cycle).inside_edges;
    c.expect(ins == w.ins, "reported interior differs from the embedding");
    if (w.kind == CycleKind::Robust) {
        const auto r = is_robust_cycle(ctx, w.cycle);
        c.expect(r.has_value(), "reported robust cycle " + edges_text(w.cycle) + " fails re-evaluation");
    } else {
        const auto f = flexible_analysis(ctx, w.cycle);
        c.expect(f.has_value(), "reported flexible cycle " + edges_text(w.cycle) + " fails re-evaluation");
        c.expect(!f || f->z == w.z, "reported Z differs");
    }
}

inline void check_bridges(const BoundaryContext& ctx, const CycleWitness& best, Checker& c)
{
    c.describe("maximality", best.exhaustive ? "exhaustive" : "hill-climb");
    check_witness(ctx, best, c);
    const auto bad = misplaced_bridges(ctx, best);
    c.expect(bad.empty(), std::to_string(bad.size()) + " bridges of the ins-maximal cycle " + edges_text(best.cycle) +
                              " lie outside without a boundary vertex");
}

inline std::vector<SuiteTask> large_tasks(std::uint64_t seed, int scale,
                                          const std::function<void(const BoundaryContext&, Checker&)>& check)
{
    const int n = std::max(scale, 130);
    std::vector<SuiteTask> tasks;
    for (int i = 0; i < kLargeInstances; ++i) {
        const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(n), 1000 + static_cast<std::uint64_t>(i));
        auto inst = i % 5 == 4 ? path_fan_instance(n - 3, s, false) : random_chain_instance(n, s);
        SuiteTask t;
        t.id = "n" + pad(static_cast<std::size_t>(n)) + (i % 5 == 4 ? "/path-fan/" : "/chain/") + pad(i);
        t.descriptor = instance_descriptor(inst);
        t.run = [inst = std::move(inst), check](Checker& c) { check(context_of(inst), c); };
        tasks.push_back(std::move(t));
    }
    return tasks;
}

inline const CycleSearchOptions kLargeSearch{20'000, 20'000, 20'000};

// ---- tripods -------------------------------------------------------------------

inline std::vector<SuiteTask> tripod_tasks(std::uint64_t seed, int count)
{
    std::vector<SuiteTask> tasks;
    {
        SuiteTask t;
        const auto g = complete_bipartite(3, 3).graph;
        t.id = "k33";
        t.descriptor = graph_descriptor("K33 with one colour class as feet", g);
        t.run = [g](Checker& c) {
            const auto r = find_tripod(g, 0, 1, 2);
            c.expect(std::holds_alternative<Tripod>(r), "no tripod returned");
            if (auto* tp = std::get_if<Tripod>(&r))
                c.expect(verify_tripod(g, *tp), "tripod fails verification: " + tripod_violation(g, *tp).value_or(""));
        };
        tasks.push_back(std::move(t));
    }
    std::mt19937_64 rng(mix_seed(seed, 0x7219));
    for (int made = 0; made < count;) {
        const int n = 6 + static_cast<int>(rng() % 5);
        const int m = n + 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n + 4));
        Multigraph g = Multigraph::with_vertices(n);
        std::set<std::pair<int, int>> used;
        for (int guard = 0; static_cast<int>(g.num_edges()) < m && guard < 1000; ++guard) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            if (a == b)
                continue;
            if (used.insert(std::minmax(a, b)).second)
                g.add_edge(a, b);
        }
        if (!internally_3_connected(g, 0, 1, 2))
            continue;
        SuiteTask t;
        t.id = "random/" + pad(static_cast<std::size_t>(made++));
        t.descriptor = graph_descriptor("random graph with feet 0 1 2", g);
        t.run = [g](Checker& c) {
            const auto r = find_tripod(g, 0, 1, 2);
            const bool embeds = disk_embeddable(g, {0, 1, 2}).has_value();
            const auto found = search_tripod(g, {0, 1, 2});
            c.expect(embeds != found.has_value(), embeds ? "embeds and has a tripod" : "neither embeds nor has a tripod");
            if (auto* tp = std::get_if<Tripod>(&r)) {
                c.expect(!embeds, "tripod returned for an embeddable graph");
                c.expect(verify_tripod(g, *tp), "tripod fails verification: " + tripod_violation(g, *tp).value_or(""));
            } else {
                const auto& pg = std::get<PlaneGraph>(r);
                c.expect(is_valid_embedding(pg), "returned embedding is invalid");
                const auto outer = outer_face_vertices(pg);
                for (VertexId v : {0, 1, 2})
                    c.expect(std::binary_search(outer.begin(), outer.end(), v), "foot not on the outer face");
            }
        };
        tasks.push_back(std::move(t));
    }
    return tasks;
}

} // namespace detail

struct SuiteInfo {
    std::string id;
    std::string description;
    bool heavy = false;
};

inline const std::vector<SuiteInfo>& suite_catalog()
{
    static const std::vector<SuiteInfo> catalog{
        {"families", "closed-form sizes and connectivity of the graph families (scale = largest k, default 8)"},
        {"outcome-minors", "the three outcome graphs are minors of K'4k, M_{2k+1} and B_{2k} (scale = k, default 4)"},
        {"nonfacial-robust", "every non-facial cycle avoiding the boundary is robust (scale = vertices)"},
        {"cycle-blocks", "without robust cycles, inner cycles are edge-disjoint and blocks are cycles or edges"},
        {"end-blocks", "without robust cycles, end blocks see two boundary vertices, sharing exactly one"},
        {"block-path", "without robust cycles, the inner block graph is a path"},
        {"robust-or-flexible", "instances with at least 130 vertices have a robust or flexible cycle"},
        {"maximal-bridges", "bridges of an ins-maximal robust or flexible cycle are inside or hold a boundary vertex"},
        {"gadget-crossing", "the A4 gadget needs two crossings and only its hub link is planarizing"},
        {"x-minimal-examples", "X-minimality verdicts on constructed examples"},
        {"shallow-families", "almost 4-connected family graphs are 5-shallow (scale = largest k, default 12)"},
        {"tripod-dichotomy", "disk embedding or tripod, never both (scale = instances, default 100)", true},
    };
    return catalog;
}

inline std::vector<std::string> suite_ids(bool include_heavy = false)
{
    std::vector<std::string> out;
    for (const auto& s : suite_catalog())
        if (include_heavy || !s.heavy)
            out.push_back(s.id);
    return out;
}

inline SuiteReport run_suite(const std::string& id, const SuiteOptions& opt = {})
{
    using namespace detail;
    const int sc = opt.scale;
    auto go = [&](int scale, std::vector<SuiteTask> tasks) { return execute(id, opt, scale, std::move(tasks)); };
    if (id == "families")
        return go(sc ? sc : 8, family_tasks(sc ? sc : 8));
    if (id == "outcome-minors")
        return go(sc ? sc : 4, outcome_minor_tasks(sc ? sc : 4));
    if (id == "nonfacial-robust")
        return go(sc, disk_tasks(opt.seed, sc, check_nonfacial_robust));
    if (id == "cycle-blocks")
        return go(sc, disk_tasks(opt.seed, sc, check_cycle_blocks));
    if (id == "end-blocks")
        return go(sc, disk_tasks(opt.seed, sc, check_end_blocks));
    if (id == "block-path")
        return go(sc, disk_tasks(opt.seed, sc, check_block_path));
    if (id == "robust-or-flexible")
        return go(sc, large_tasks(opt.seed, sc, [](const BoundaryContext& ctx, Checker& c) {
                      const auto w = find_robust_or_flexible(ctx, kLargeSearch);
                      c.expect(w.has_value(), "no robust or flexible cycle");
                      if (w) {
                          c.describe("witness_kind", to_string(w->kind));
                          check_witness(ctx, *w, c);
                      }
                  }));
    if (id == "maximal-bridges") {
        auto check = [](const BoundaryContext& ctx, Checker& c) {
            const bool large = ctx.graph().num_vertices() >= 130;
            const auto opt2 = large ? kLargeSearch : CycleSearchOptions{};
            if (!find_robust_or_flexible(ctx, opt2))
                return;
            check_bridges(ctx, maximal_robust_or_flexible(ctx, opt2), c);
        };
        auto tasks = disk_tasks(opt.seed, sc, check);
        for (auto& t : large_tasks(opt.seed, sc, check))
            tasks.push_back(std::move(t));
        return go(sc, std::move(tasks));
    }
    if (id == "gadget-crossing")
        return go(sc, gadget_tasks());
    if (id == "x-minimal-examples")
        return go(sc, x_minimal_tasks());
    if (id == "shallow-families")
        return go(sc ? sc : 12, shallow_tasks(sc ? sc : 12));
    if (id == "tripod-dichotomy")
        return go(sc ? sc : 100, tripod_tasks(opt.seed, sc ? sc : 100));
    throw UnknownSuite("unknown suite '" + id + "'");
}

} // namespace xminor
