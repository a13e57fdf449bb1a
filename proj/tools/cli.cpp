#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "emcover/bounds.hpp"
#include "emcover/cache.hpp"
#include "emcover/constructions.hpp"
#include "emcover/coverage.hpp"
#include "emcover/io.hpp"
#include "emcover/random.hpp"
#include "emcover/setsys.hpp"
#include "emcover/solver.hpp"

namespace emcover::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoOptions {
    std::string input = "-";
    std::string format = "json";
};

struct BudgetOptions {
    int workers = 1;
    std::uint64_t node_cap = SearchBudget{}.node_cap;
    double time_cap_s = 1800;
    bool allow_large = false;
    std::string cache_path;
    bool no_cache = false;

    SearchBudget budget() const {
        SearchBudget b;
        b.workers = workers;
        b.node_cap = node_cap;
        b.time_cap = std::chrono::milliseconds(static_cast<long long>(time_cap_s * 1000));
        b.allow_large = allow_large;
        return b;
    }

    std::unique_ptr<ResultsCache> open_cache() const {
        if (no_cache) return nullptr;
        if (!cache_path.empty()) return std::make_unique<ResultsCache>(cache_path);
        if (const char* env = std::getenv(kCacheEnvVar); env != nullptr && *env != '\0')
            return std::make_unique<ResultsCache>(env);
        return nullptr;
    }
};

void add_io(CLI::App* cmd, IoOptions& io) {
    cmd->add_option("-i,--input", io.input, "input file ('-' for stdin)");
    cmd->add_option("--format", io.format, "json | edgelist")->check(CLI::IsMember({"json", "edgelist"}));
}

void add_budget(CLI::App* cmd, BudgetOptions& b) {
    cmd->add_option("--workers", b.workers, "search worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--node-cap", b.node_cap, "search node budget")->check(CLI::PositiveNumber);
    cmd->add_option("--time-cap", b.time_cap_s, "search time budget in seconds")->check(CLI::PositiveNumber);
    cmd->add_flag("--allow-large", b.allow_large, "lift the default instance size caps");
    cmd->add_option("--cache", b.cache_path, std::string("results cache file (default $") + kCacheEnvVar + ")");
    cmd->add_flag("--no-cache", b.no_cache, "ignore the results cache");
}

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream ss;
    if (path == "-") {
        ss << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw InputError("cannot read " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

json read_json(const IoOptions& io, std::istream& in) {
    const std::string text = slurp(io.input, in);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Hypergraph read_hypergraph(const IoOptions& io, std::istream& in) {
    try {
        if (io.format == "edgelist") {
            std::istringstream ss(slurp(io.input, in));
            return hypergraph_from_edgelist(ss);
        }
        return hypergraph_from_json(read_json(io, in));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string("invalid hypergraph: ") + e.what());
    }
}

Digraph read_digraph(const IoOptions& io, std::istream& in) {
    try {
        return digraph_from_json(read_json(io, in));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string("invalid digraph: ") + e.what());
    }
}

void write_hypergraph(std::ostream& out, std::ostream& err, const Hypergraph& h, const std::string& format,
                      json provenance = nullptr) {
    if (format == "edgelist") {
        if (!provenance.is_null()) err << "provenance " << provenance.dump() << '\n';
        out << to_edgelist(h);
        return;
    }
    json j = to_json(h);
    if (!provenance.is_null()) j["provenance"] = std::move(provenance);
    out << j.dump() << '\n';
}

std::string echo(const std::vector<std::string>& args) {
    std::string line = "emcover";
    for (const auto& a : args) line += " " + a;
    return line;
}

void report_search(std::ostream& err, const SolveResult& res) {
    err << (res.from_cache ? "cache hit" : "cache miss") << "; nodes " << res.nodes_explored << "; time "
        << std::fixed << std::setprecision(3) << res.wall_time.count() << " s\n";
}

std::optional<int> inner_covering_number(int m, int r, const BudgetOptions& bo, ResultsCache* cache, std::ostream& err) {
    try {
        const auto d = solve_D(m, r, bo.budget(), cache);
        if (d.proof_state == ProofState::optimal) return d.optimum;
        err << "D(" << m << "," << r << ") not proven within budget\n";
    } catch (const std::invalid_argument& e) {
        err << "D(" << m << "," << r << ") unavailable: " << e.what() << '\n';
    }
    return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Covering problems for uniform hypergraphs and digraphs: constructions, audits, bounds, exact solving"};
    app.name("emcover");
    app.require_subcommand(1);

    std::function<int()> action;
    IoOptions io;
    BudgetOptions bo;
    int n = 0, k = 0, r = 0, s = 1, residue = 0, m = 0, n_max = 7;
    std::uint64_t seed = kDefaultSeed;
    std::string strategy = "greedy";
    std::string inner_path;
    std::optional<int> inner_covering;
    std::vector<std::string> choices;
    bool exhaustive = false;
    bool digraph = false;
    bool as_json = false;

    auto need_n = [&](CLI::App* c) { c->add_option("--n", n, "vertex count")->required(); };
    auto need_k = [&](CLI::App* c) { c->add_option("--k", k, "size of the sets to cover")->required(); };
    auto need_r = [&](CLI::App* c) { c->add_option("--r", r, "uniformity")->required(); };

    // ---------------------------------------------------------------- construct
    auto* construct = app.add_subcommand("construct", "build a hypergraph or digraph");
    construct->require_subcommand(1);
    {
        auto* c = construct->add_subcommand("g", "member of the extremal family G(n,k,r)");
        need_n(c), need_k(c), need_r(c);
        c->add_option("--strategy", strategy, "inner covering: exact | greedy | modular")
            ->check(CLI::IsMember({"exact", "greedy", "modular"}));
        c->add_option("--residue", residue, "modular residue c (default n-k+r-1)");
        c->add_option("--inner", inner_path, "JSON file with a supplied inner covering (overrides --strategy)");
        add_io(c, io);
        add_budget(c, bo);
        c->callback([&] {
            action = [&] {
                CoveringStrategy st = parse_strategy(strategy);
                if (!inner_path.empty()) {
                    IoOptions inner_io{inner_path, "json"};
                    st = SuppliedCovering{read_hypergraph(inner_io, in)};
                } else if (residue != 0) {
                    if (strategy != "modular") throw std::invalid_argument("--residue needs --strategy modular");
                    st = ModularCovering{residue};
                }
                const auto budget = bo.budget();
                const auto built = build_G(n, k, r, st, &budget);
                json prov{{"construction", "G"},
                          {"n", n},
                          {"k", k},
                          {"r", r},
                          {"strategy", strategy_name(st)},
                          {"inner_vertices", built.inner_vertices},
                          {"inner_edges", built.inner_edges},
                          {"patch_count", built.patch_count}};
                write_hypergraph(out, err, built.graph, io.format, prov);
                return int{kOk};
            };
        });
    }
    {
        auto* c = construct->add_subcommand("em", "extremal graph for r = 2");
        need_n(c), need_k(c);
        add_io(c, io);
        c->callback([&] {
            action = [&] {
                write_hypergraph(out, err, em_graph(n, k), io.format, json{{"construction", "em"}, {"n", n}, {"k", k}});
                return int{kOk};
            };
        });
    }
    {
        auto* c = construct->add_subcommand("modular", "sum-mod-n covering with patches");
        need_n(c), need_r(c);
        c->add_option("--c,--residue", residue, "residue c in [1,n] (default n)");
        add_io(c, io);
        c->callback([&] {
            action = [&] {
                const int c_val = residue == 0 ? n : residue;
                const auto res = modular_covering(n, r, c_val);
                write_hypergraph(out, err, res.covering, io.format,
                                 json{{"construction", "modular"}, {"n", n}, {"r", r}, {"c", c_val},
                                      {"patch_count", res.patch_count}});
                return int{kOk};
            };
        });
    }
    {
        auto* c = construct->add_subcommand("greedy", "greedy covering of (r-1)-sets");
        need_n(c), need_r(c);
        add_io(c, io);
        c->callback([&] {
            action = [&] {
                write_hypergraph(out, err, greedy_covering(n, r), io.format,
                                 json{{"construction", "greedy"}, {"n", n}, {"r", r}});
                return int{kOk};
            };
        });
    }
    {
        auto* c = construct->add_subcommand("digraph-a", "member of the digraph family A(n,k)");
        need_n(c), need_k(c);
        c->add_option("--choice", choices, "outer vertex choice as i:a,b,... (repeatable)");
        c->callback([&] {
            action = [&] {
                std::map<Vertex, VertexSet> pick;
                for (const auto& item : choices) {
                    const auto colon = item.find(':');
                    if (colon == std::string::npos) throw std::invalid_argument("--choice expects i:a,b,...");
                    VertexSet set;
                    std::istringstream list(item.substr(colon + 1));
                    for (std::string tok; std::getline(list, tok, ',');) set.push_back(std::stoi(tok));
                    pick[std::stoi(item.substr(0, colon))] = set;
                }
                out << to_json(build_A(n, k, pick)).dump() << '\n';
                return int{kOk};
            };
        });
    }
    {
        auto* c = construct->add_subcommand("random", "seeded random r-uniform hypergraph");
        need_n(c), need_r(c);
        c->add_option("--edges", m, "edge count")->required();
        c->add_option("--seed", seed, "random seed");
        add_io(c, io);
        c->callback([&] {
            action = [&] {
                std::mt19937_64 rng(seed);
                write_hypergraph(out, err, random_hypergraph(n, r, m, rng), io.format);
                return int{kOk};
            };
        });
    }

    // ---------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "check a property of the input");
    verify->require_subcommand(1);
    {
        auto* c = verify->add_subcommand("cover", "every k-set covered by at least s vertices");
        need_k(c);
        c->add_option("--s", s, "required number of covering vertices")->check(CLI::PositiveNumber);
        c->add_flag("--exhaustive", exhaustive, "audit every k-set even after a failure");
        add_io(c, io);
        c->callback([&] {
            action = [&] {
                const Hypergraph h = read_hypergraph(io, in);
                const auto rep = audit(h, k, s, {exhaustive});
                if (rep.covered) {
                    out << "covered, multiplicity_min=" << *rep.multiplicity_min << ", audited=" << rep.audited << '\n';
                    return int{kOk};
                }
                out << "uncovered, witness=" << to_string(*rep.witness) << ", audited=" << rep.audited;
                if (exhaustive) out << ", failures=" << rep.failures;
                out << '\n';
                return int{kVerificationFailed};
            };
        });
    }
    {
        auto* c = verify->add_subcommand("sk", "digraph property S_k");
        need_k(c);
        add_io(c, io);
        c->callback([&] {
            action = [&] {
                const auto rep = has_property_Sk(read_digraph(io, in), k);
                if (rep.holds) {
                    out << "S_" << k << " holds\n";
                    return int{kOk};
                }
                out << "S_" << k << " fails, witness=" << to_string(*rep.witness) << '\n';
                return int{kVerificationFailed};
            };
        });
    }
    {
        auto* c = verify->add_subcommand("shadow-complete", "every (r-1)-set lies in an edge");
        add_io(c, io);
        c->callback([&] {
            action = [&] {
                const bool ok = shadow_complete(read_hypergraph(io, in));
                out << (ok ? "shadow complete\n" : "shadow incomplete\n");
                return ok ? int{kOk} : int{kVerificationFailed};
            };
        });
    }
    {
        auto* c = verify->add_subcommand("member-g", "membership in G(n,k,r) up to isomorphism");
        need_k(c);
        c->add_option("--inner-covering", inner_covering, "covering number D(n-k+r-1, r) if known");
        add_io(c, io);
        add_budget(c, bo);
        c->callback([&] {
            action = [&] {
                const Hypergraph h = read_hypergraph(io, in);
                auto cache = bo.open_cache();
                const bool ok = is_member_G(h, k, inner_covering, cache.get(), bo.budget());
                out << (ok ? "member\n" : "not a member\n");
                return ok ? int{kOk} : int{kVerificationFailed};
            };
        });
    }
    {
        auto* c = verify->add_subcommand("member-a", "membership in A(n,k)");
        need_k(c);
        add_io(c, io);
        c->callback([&] {
            action = [&] {
                const bool ok = is_member_A(read_digraph(io, in), k);
                out << (ok ? "member\n" : "not a member\n");
                return ok ? int{kOk} : int{kVerificationFailed};
            };
        });
    }

    // ---------------------------------------------------------------- bound
    auto* bound = app.add_subcommand("bound", "closed-form values and bounds");
    bound->require_subcommand(1);
    auto table = [&](const std::string& quantity, const std::string& value, const std::string& formula,
                     const std::string& tag) {
        out << std::left << std::setw(10) << "quantity" << quantity << '\n'
            << std::setw(10) << "value" << value << '\n'
            << std::setw(10) << "formula" << formula << '\n'
            << std::setw(10) << "tag" << tag << '\n';
    };
    auto args3 = [](int a, int b, int c) {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    };
    {
        auto* c = bound->add_subcommand("em", "f(n,k,2) for graphs");
        need_n(c), need_k(c);
        c->callback([&] {
            action = [&] {
                table("f" + args3(n, k, 2), erdos_moser_f(n, k).str(), "(k-1)(n-1) - C(k-1,2) + ceil((n-k+1)/2)",
                      "Erdos-Moser graph formula");
                return int{kOk};
            };
        });
    }
    {
        auto* c = bound->add_subcommand("g", "edge count of G(n,k,r)");
        need_n(c), need_k(c), need_r(c);
        c->add_option("--inner-covering", inner_covering, "D(n-k+r-1, r); solved when omitted");
        add_budget(c, bo);
        c->callback([&] {
            action = [&] {
                auto cache = bo.open_cache();
                const int inner_n = n - k + r - 1;
                auto d = inner_covering ? inner_covering : inner_covering_number(inner_n, r, bo, cache.get(), err);
                if (!d) return int{kBudgetExhausted};
                table("g" + args3(n, k, r), g_value(n, k, r, *d).str(),
                      "C(n,r) - C(n-k+r-1,r) + D(n-k+r-1,r), D = " + std::to_string(*d),
                      "extremal-family count");
                return int{kOk};
            };
        });
    }
    {
        auto* c = bound->add_subcommand("g-steiner", "G(n,k,r) count assuming a perfect inner covering");
        need_n(c), need_k(c), need_r(c);
        c->callback([&] {
            action = [&] {
                const auto sv = g_steiner(n, k, r);
                table("g" + args3(n, k, r),
                      sv.integral ? sv.value.str() + " (candidate: divisibility holds, design existence not established)"
                                  : "not integral (no Steiner system with these parameters)",
                      "C(n,r) - C(n-k+r-1,r) + C(n-k+r-1,r-1)/r", "extremal-family count, Steiner case");
                return int{kOk};
            };
        });
    }
    {
        auto* c = bound->add_subcommand("covering-lb", "counting lower bound on D(n,r)");
        need_n(c), need_r(c);
        c->callback([&] {
            action = [&] {
                table("D(" + std::to_string(n) + "," + std::to_string(r) + ") >=", covering_lb(n, r).str(),
                      "ceil(C(n,r-1)/r)", "trivial covering bound");
                return int{kOk};
            };
        });
    }
    {
        auto* c = bound->add_subcommand("kk", "Lovasz form of Kruskal-Katona shadow bound");
        c->add_option("--m", m, "edge count")->required();
        need_r(c);
        c->callback([&] {
            action = [&] {
                const auto x = lovasz_x(m, r);
                std::ostringstream v;
                v << std::setprecision(10) << kk_shadow_lb(m, r) << " (x = " << x.x << ")";
                table("|shadow| of " + std::to_string(m) + " " + std::to_string(r) + "-sets", v.str(),
                      "C(x,r-1) where C(x,r) = m", "Kruskal-Katona, Lovasz form");
                return int{kOk};
            };
        });
    }

    // ---------------------------------------------------------------- solve
    auto* solve = app.add_subcommand("solve", "exact search");
    solve->require_subcommand(1);
    auto finish_solve = [&](const SolveResult& res) {
        err << "run: " << echo(args) << '\n';
        report_search(err, res);
        out << "optimum " << res.optimum << '\n' << "proof_state " << to_string(res.proof_state) << '\n';
        if (res.proof_state != ProofState::optimal) out << "lower_bound " << res.lower_bound << '\n';
        const json cert = std::holds_alternative<Hypergraph>(res.certificate) ? to_json(res.hypergraph())
                                                                               : to_json(res.digraph());
        out << "certificate " << cert.dump() << '\n';
        return res.proof_state == ProofState::optimal ? int{kOk} : int{kBudgetExhausted};
    };
    {
        auto* c = solve->add_subcommand("d", "covering number D(n,r)");
        need_n(c), need_r(c);
        add_budget(c, bo);
        c->callback([&] {
            action = [&] {
                auto cache = bo.open_cache();
                const auto res = solve_D(n, r, bo.budget(), cache.get());
                out << "covering_lb " << covering_lb(n, r) << '\n';
                return finish_solve(res);
            };
        });
    }
    {
        auto* c = solve->add_subcommand("f", "f(n,k,r), or h(n,k,r,s) with --s");
        need_n(c), need_k(c), need_r(c);
        c->add_option("--s", s, "covering multiplicity")->check(CLI::PositiveNumber);
        add_budget(c, bo);
        c->callback([&] {
            action = [&] {
                auto cache = bo.open_cache();
                const auto res = solve_f(n, k, r, s, bo.budget(), cache.get());
                const int code = finish_solve(res);
                if (s == 1) {
                    if (auto d = inner_covering_number(n - k + r - 1, r, bo, cache.get(), err)) {
                        const auto g = g_value(n, k, r, *d);
                        out << "g " << g << '\n';
                        if (res.proof_state == ProofState::optimal)
                            out << "f_equals_g " << (BigInt(res.optimum) == g ? "yes" : "no") << '\n';
                    }
                } else if (r == 2 && k + s - 1 < n) {
                    // reported side by side only; the two need not agree for small n
                    out << "f(n,k+s-1,2) " << erdos_moser_f(n, k + s - 1) << '\n';
                }
                return code;
            };
        });
    }
    {
        auto* c = solve->add_subcommand("digraph", "fewest arcs of a digraph with S_k");
        need_n(c), need_k(c);
        add_budget(c, bo);
        c->callback([&] {
            action = [&] {
                auto cache = bo.open_cache();
                const auto res = solve_digraph_min(n, k, bo.budget(), cache.get());
                const int code = finish_solve(res);
                out << "member_A " << (is_member_A(res.digraph(), k) ? "yes" : "no") << '\n';
                return code;
            };
        });
    }
    {
        auto* c = solve->add_subcommand("oriented-f", "fewest vertices of an oriented graph with S_k");
        need_k(c);
        c->add_option("--n-max", n_max, "largest vertex count to try");
        add_budget(c, bo);
        c->callback([&] {
            action = [&] {
                auto cache = bo.open_cache();
                const auto res = solve_oriented_min_vertices(k, n_max, bo.budget(), cache.get());
                err << "run: " << echo(args) << '\n';
                err << (res.from_cache ? "cache hit" : "cache miss") << "; nodes " << res.nodes_explored << '\n';
                if (res.proof_state != ProofState::optimal) {
                    out << "budget exhausted\n";
                    return int{kBudgetExhausted};
                }
                if (!res.vertices) {
                    out << "not found <= " << n_max << '\n';
                    return int{kOk};
                }
                out << "vertices " << *res.vertices << '\n' << "witness " << to_json(*res.witness).dump() << '\n';
                return int{kOk};
            };
        });
    }

    // ---------------------------------------------------------------- enumerate
    {
        auto* c = app.add_subcommand("enumerate", "all optima up to isomorphism");
        c->add_option("--n", n, "vertex count")->required();
        c->add_option("--k", k, "size of the sets to cover")->required();
        c->add_option("--r", r, "uniformity (hypergraph problems)");
        c->add_option("--s", s, "covering multiplicity")->check(CLI::PositiveNumber);
        c->add_flag("--digraph", digraph, "minimum digraphs with S_k instead");
        add_budget(c, bo);
        c->callback([&] {
            action = [&] {
                if (!digraph && r == 0) throw std::invalid_argument("enumerate: --r is required for hypergraph problems");
                const auto res = digraph ? enumerate_digraph_min(n, k, bo.budget())
                                         : enumerate_extremal(n, k, r, s, bo.budget());
                err << "run: " << echo(args) << '\n';
                report_search(err, res);
                if (res.proof_state != ProofState::optimal || !res.all_optima) {
                    out << "budget exhausted\n";
                    return int{kBudgetExhausted};
                }
                out << "optimum " << res.optimum << '\n' << "classes " << res.all_optima->size() << '\n';
                for (const auto& form : *res.all_optima) {
                    out << (digraph ? to_json(canonical_digraph(form)) : to_json(canonical_hypergraph(form))).dump()
                        << '\n';
                }
                return int{kOk};
            };
        });
    }

    // ---------------------------------------------------------------- shadow
    {
        auto* c = app.add_subcommand("shadow", "the (r-1)-shadow of the input hypergraph");
        add_io(c, io);
        c->callback([&] {
            action = [&] {
                write_hypergraph(out, err, shadow(read_hypergraph(io, in)), io.format);
                return int{kOk};
            };
        });
    }

    // ---------------------------------------------------------------- cache
    auto* cache_cmd = app.add_subcommand("cache", "inspect the results cache");
    cache_cmd->require_subcommand(1);
    auto cache_for = [&]() {
        auto c = bo.open_cache();
        if (!c) throw std::invalid_argument(std::string("no cache: pass --cache or set $") + kCacheEnvVar);
        return c;
    };
    {
        auto* c = cache_cmd->add_subcommand("show", "list cached optima");
        c->add_option("--cache", bo.cache_path, "results cache file");
        c->add_flag("--json", as_json, "print records as JSON lines");
        c->callback([&] {
            action = [&] {
                auto cache = cache_for();
                for (const auto& rec : cache->records()) {
                    if (as_json)
                        out << to_json(rec).dump() << '\n';
                    else
                        out << rec.problem << ' ' << rec.params.dump() << " optimum " << rec.optimum << " ("
                            << rec.solver_version << ")\n";
                }
                if (cache->rejected() != 0) err << cache->rejected() << " invalid line(s) ignored\n";
                return int{kOk};
            };
        });
    }
    {
        auto* c = cache_cmd->add_subcommand("verify", "re-verify every certificate");
        c->add_option("--cache", bo.cache_path, "results cache file");
        c->callback([&] {
            action = [&] {
                auto cache = cache_for();
                for (const auto& why : cache->rejections()) out << "rejected " << why << '\n';
                out << cache->records().size() << " valid, " << cache->rejected() << " rejected\n";
                return cache->rejected() == 0 ? int{kOk} : int{kVerificationFailed};
            };
        });
    }
    {
        auto* c = cache_cmd->add_subcommand("gc", "drop invalid and duplicate lines");
        c->add_option("--cache", bo.cache_path, "results cache file");
        c->callback([&] {
            action = [&] {
                auto cache = cache_for();
                const auto dropped = cache->gc();
                out << "dropped " << dropped << " line(s), kept " << cache->records().size() << '\n';
                return int{kOk};
            };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }
    if (!action) return kUsage;

    try {
        return action();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const SearchExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExhausted;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
}

}  // namespace emcover::cli
