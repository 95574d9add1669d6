#include "emn/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "emn/embedding.hpp"
#include "emn/errors.hpp"
#include "emn/graph.hpp"
#include "emn/harness.hpp"
#include "emn/matching.hpp"
#include "emn/surfaces.hpp"

namespace emn {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GraphInput {
    std::string g6;
    std::string path;

    // returns (graphs, named) where named means input came from a stream
    std::pair<std::vector<Graph>, bool> load() const {
        if (g6.empty() == path.empty())
            throw std::invalid_argument("provide exactly one of --g6 and --in");
        if (!g6.empty()) return {{parse_graph6(g6)}, false};
        return {parse_graph6_lines(slurp(path)), true};
    }
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--g6", in.g6, "graph6 text of one graph");
    cmd->add_option("--in", in.path, "graph6 file, one graph per line ('-' = stdin)");
}

struct KindFlags {
    bool orientable = false;
    bool non_orientable = false;

    SurfaceKind kind() const {
        if (orientable == non_orientable)
            throw std::invalid_argument("choose exactly one of --orientable and "
                                        "--non-orientable");
        return orientable ? SurfaceKind::Orientable : SurfaceKind::NonOrientable;
    }
};

void add_kind_flags(CLI::App* cmd, KindFlags& kf) {
    cmd->add_flag("--orientable", kf.orientable, "orientable surface");
    cmd->add_flag("--non-orientable", kf.non_orientable, "non-orientable surface");
}

Edge parse_edge_arg(const std::string& text) {
    for (char sep : {',', '-'}) {
        auto pos = text.find(sep);
        if (pos == std::string::npos) continue;
        try {
            int u = std::stoi(text.substr(0, pos));
            int v = std::stoi(text.substr(pos + 1));
            return make_edge(u, v);
        } catch (const std::invalid_argument&) {
            break;
        }
    }
    throw std::invalid_argument("edge argument must look like 'u,v'");
}

json matching_json(const Matching& m) {
    json a = json::array();
    for (const Edge& e : m.edges) a.push_back({e.u, e.v});
    return a;
}

std::string matching_text(const Matching& m) {
    std::string s;
    for (const Edge& e : m.edges) {
        if (!s.empty()) s += ' ';
        s += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return s;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for restricted matching extendability E(m,n) and "
                 "graph embeddings on surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    // ---- emn-check / extendable ----
    GraphInput check_in;
    int check_m = 0, check_n = 0;
    CLI::App* check = app.add_subcommand("emn-check", "decide property E(m,n)");
    add_graph_input(check, check_in);
    check->add_option("--m", check_m, "forced matching size")->required();
    check->add_option("--n", check_n, "forbidden matching size")->required();

    GraphInput ext_in;
    int ext_m = 0;
    CLI::App* ext = app.add_subcommand("extendable", "decide m-extendability, E(m,0)");
    add_graph_input(ext, ext_in);
    ext->add_option("--m", ext_m, "matching size")->required();

    // ---- pm ----
    GraphInput pm_in;
    std::vector<std::string> pm_force, pm_forbid;
    CLI::App* pm = app.add_subcommand(
        "pm", "perfect matching with forced and forbidden edges");
    add_graph_input(pm, pm_in);
    pm->add_option("--force", pm_force, "forced edge 'u,v' (repeatable)");
    pm->add_option("--forbid", pm_forbid, "forbidden edge 'u,v' (repeatable)");

    // ---- faces ----
    std::string faces_rot;
    CLI::App* faces = app.add_subcommand("faces", "trace the faces of a .rot embedding");
    faces->add_option("--rot", faces_rot, ".rot file ('-' = stdin)")->required();

    // ---- genus ----
    GraphInput genus_in;
    std::string genus_kind = "orientable";
    std::uint64_t genus_max_maps = 10'000'000;
    double genus_timeout = 0.0;
    CLI::App* genus = app.add_subcommand("genus", "exhaustive minimum genus with witness");
    add_graph_input(genus, genus_in);
    genus->add_option("--kind", genus_kind, "orientable or non-orientable")
        ->check(CLI::IsMember({"orientable", "non-orientable"}));
    genus->add_option("--max-rotations", genus_max_maps, "search-space budget");
    genus->add_option("--timeout-secs", genus_timeout, "wall-clock budget (0 = none)");

    // ---- mu / threshold / claim3 ----
    KindFlags mu_kind;
    int mu_genus = 0;
    CLI::App* mu_cmd = app.add_subcommand("mu", "extendability bound mu of a surface");
    add_kind_flags(mu_cmd, mu_kind);
    mu_cmd->add_option("--genus", mu_genus, "surface genus")->required();

    KindFlags thr_kind;
    int thr_genus = 0, thr_k = 4;
    CLI::App* thr = app.add_subcommand("threshold", "vertex-count threshold for E(k-1,1)");
    add_kind_flags(thr, thr_kind);
    thr->add_option("--genus", thr_genus, "surface genus")->required();
    thr->add_option("--k", thr_k, "k >= 4")->required();

    KindFlags c3_kind;
    int c3_genus = 0;
    CLI::App* c3 = app.add_subcommand("claim3", "check floor(c) <= mu for a surface");
    add_kind_flags(c3, c3_kind);
    c3->add_option("--genus", c3_genus, "surface genus")->required();

    // ---- gen / enumerate ----
    std::string gen_family;
    std::vector<int> gen_params;
    CLI::App* gen = app.add_subcommand("gen", "generate a named graph family member");
    gen->add_option("--family", gen_family,
                    "complete | cycle | complete-bipartite | q3 | icosahedron | "
                    "petersen | join-counterexample")
        ->required();
    gen->add_option("--param", gen_params, "family parameter (repeatable)");

    int enum_n = 0;
    int enum_min_degree = -1;
    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "connected graphs on n vertices, one per class");
    enum_cmd->add_option("--n", enum_n, "vertex count (<= 8)")->required();
    enum_cmd->add_option("--min-degree", enum_min_degree, "minimum degree filter");

    // ---- verify-lemmas / verify-theorems ----
    std::string vl_in;
    int vl_all_connected = 0;
    int vl_max_m = 2, vl_max_n = 1, vl_jobs = 1;
    CLI::App* vl = app.add_subcommand("verify-lemmas",
                                      "run the matching-consistency suite over a corpus");
    vl->add_option("--in", vl_in, "graph6 corpus file ('-' = stdin)");
    vl->add_option("--all-connected", vl_all_connected,
                   "use every connected graph on 1..N vertices (N <= 8)");
    vl->add_option("--max-m", vl_max_m, "largest forced size");
    vl->add_option("--max-n", vl_max_n, "largest forbidden size");
    vl->add_option("--jobs", vl_jobs, "worker count");

    std::string vt_in;
    std::vector<std::string> vt_rots;
    std::uint64_t vt_max_maps = 10'000'000;
    double vt_timeout = 0.0;
    int vt_jobs = 1;
    CLI::App* vt = app.add_subcommand("verify-theorems",
                                      "run the surface-bound suite over a corpus");
    vt->add_option("--in", vt_in, "graph6 corpus file ('-' = stdin)");
    vt->add_option("--rot", vt_rots, ".rot embedding fixture (repeatable)");
    vt->add_option("--max-rotations", vt_max_maps, "per-graph genus search budget");
    vt->add_option("--timeout-secs", vt_timeout, "per-graph genus time budget");
    vt->add_option("--jobs", vt_jobs, "worker count");

    std::vector<const char*> argv;
    argv.push_back("emn");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    bool as_json = format == "json";

    try {
        if (*check || *ext) {
            GraphInput& in = *check ? check_in : ext_in;
            EmnQuery q = *check ? EmnQuery{check_m, check_n} : EmnQuery{ext_m, 0};
            auto [graphs, named] = in.load();
            bool any_fails = false;
            for (const Graph& g : graphs) {
                EmnVerdict v = has_property_emn(g, q);
                any_fails = any_fails || v.outcome == EmnOutcome::Fails;
                if (as_json) {
                    json j = verdict_to_json(v);
                    if (named) {
                        json withg;
                        withg["graph6"] = write_graph6(g);
                        withg.update(j);
                        j = std::move(withg);
                    }
                    out << j.dump() << "\n";
                } else {
                    if (named) out << write_graph6(g) << "\t";
                    out << outcome_name(v.outcome);
                    if (v.witness)
                        out << "\tM=" << matching_text(v.witness->forced)
                            << " N=" << matching_text(v.witness->forbidden);
                    if (!v.reason.empty()) out << "\t" << v.reason;
                    out << "\n";
                }
            }
            return any_fails ? kExitFails : kExitOk;
        }

        if (*pm) {
            auto [graphs, named] = pm_in.load();
            if (graphs.size() != 1)
                throw std::invalid_argument("pm expects exactly one graph");
            Matching forced;
            for (const std::string& s : pm_force) forced.edges.push_back(parse_edge_arg(s));
            std::sort(forced.edges.begin(), forced.edges.end());
            std::vector<Edge> forbidden;
            for (const std::string& s : pm_forbid) forbidden.push_back(parse_edge_arg(s));
            auto result = constrained_perfect_matching(graphs[0], forced, forbidden);
            if (as_json) {
                json j;
                j["outcome"] = result ? "present" : "absent";
                if (result) j["matching"] = matching_json(*result);
                out << j.dump() << "\n";
            } else {
                out << (result ? matching_text(*result) : "absent") << "\n";
            }
            return kExitOk;
        }

        if (*faces) {
            CombinatorialMap map = parse_rot(slurp(faces_rot));
            EulerReport rep = euler_report(map);
            FaceSet fs = trace_faces(map);
            if (as_json) {
                json j;
                j["face_count"] = rep.face_count;
                j["sizes"] = fs.sizes;
                j["chi"] = rep.chi;
                j["orientable"] = rep.orientable;
                j["genus"] = rep.genus;
                json walks = json::array();
                for (const auto& walk : fs.faces) {
                    json w = json::array();
                    for (const auto& [a, b] : walk) w.push_back({a, b});
                    walks.push_back(w);
                }
                j["faces"] = walks;
                json phis = json::array();
                for (const Rational& r : rep.phi) phis.push_back(r.str());
                j["phi"] = phis;
                j["control_points"] = rep.control_points;
                out << j.dump() << "\n";
            } else {
                out << "faces " << rep.face_count << ", chi " << rep.chi << ", "
                    << (rep.orientable ? "orientable genus " : "non-orientable genus ")
                    << rep.genus << "\n";
                for (std::size_t i = 0; i < fs.faces.size(); ++i) {
                    out << "face " << i << " (size " << fs.sizes[i] << "):";
                    for (const auto& [a, b] : fs.faces[i]) out << " " << a << ">" << b;
                    out << "\n";
                }
                for (std::size_t v = 0; v < rep.phi.size(); ++v)
                    out << "phi(" << v << ") = " << rep.phi[v].str() << "\n";
                out << "control points:";
                for (int v : rep.control_points) out << " " << v;
                out << "\n";
            }
            return kExitOk;
        }

        if (*genus) {
            auto [graphs, named] = genus_in.load();
            GenusBudget budget{genus_max_maps, genus_timeout};
            SurfaceKind kind = genus_kind == "orientable" ? SurfaceKind::Orientable
                                                          : SurfaceKind::NonOrientable;
            for (const Graph& g : graphs) {
                GenusResult res = exhaustive_genus(g, kind, budget);
                if (as_json) {
                    json j;
                    j["graph6"] = write_graph6(g);
                    j["genus"] = res.genus;
                    j["maps_examined"] = res.maps_examined;
                    j["witness"] = write_rot(res.witness);
                    out << j.dump() << "\n";
                } else {
                    out << write_graph6(g) << "\tgenus " << res.genus << "\n"
                        << write_rot(res.witness);
                }
            }
            return kExitOk;
        }

        if (*mu_cmd) {
            Surface s = mu_kind.kind() == SurfaceKind::Orientable
                            ? Surface::orientable(mu_genus)
                            : Surface::non_orientable(mu_genus);
            if (as_json)
                out << json{{"mu", mu(s)}}.dump() << "\n";
            else
                out << mu(s) << "\n";
            return kExitOk;
        }

        if (*thr) {
            Surface s = thr_kind.kind() == SurfaceKind::Orientable
                            ? Surface::orientable(thr_genus)
                            : Surface::non_orientable(thr_genus);
            long long t = theorem2_threshold(thr_k, s);
            if (as_json)
                out << json{{"threshold", t}}.dump() << "\n";
            else
                out << t << "\n";
            return kExitOk;
        }

        if (*c3) {
            Surface s = c3_kind.kind() == SurfaceKind::Orientable
                            ? Surface::orientable(c3_genus)
                            : Surface::non_orientable(c3_genus);
            bool ok = claim3_holds(s);
            if (as_json)
                out << json{{"c", c_constant(s).str()}, {"floor_c", c_constant(s).floor()},
                            {"mu", mu(s)}, {"claim3", ok}}
                           .dump()
                    << "\n";
            else
                out << (ok ? "true" : "false") << "\n";
            return kExitOk;
        }

        if (*gen) {
            Graph g = generate_family(gen_family, gen_params);
            if (as_json)
                out << json{{"graph6", write_graph6(g)}}.dump() << "\n";
            else
                out << write_graph6(g) << "\n";
            return kExitOk;
        }

        if (*enum_cmd) {
            std::optional<int> md;
            if (enum_min_degree >= 0) md = enum_min_degree;
            for (const Graph& g : enumerate_connected_graphs(enum_n, md)) {
                if (as_json)
                    out << json{{"graph6", write_graph6(g)}}.dump() << "\n";
                else
                    out << write_graph6(g) << "\n";
            }
            return kExitOk;
        }

        if (*vl) {
            std::vector<Graph> corpus;
            if (!vl_in.empty() && vl_all_connected > 0)
                throw std::invalid_argument("choose one of --in and --all-connected");
            if (!vl_in.empty()) {
                corpus = parse_graph6_lines(slurp(vl_in));
            } else if (vl_all_connected > 0) {
                for (int k = 1; k <= vl_all_connected; ++k)
                    for (Graph& g : enumerate_connected_graphs(k)) corpus.push_back(std::move(g));
            } else {
                throw std::invalid_argument("provide --in or --all-connected");
            }
            ScanReport rep = run_lemma_suite(corpus, vl_max_m, vl_max_n, vl_jobs);
            out << (as_json ? report_to_json(rep).dump() + "\n" : report_to_table(rep));
            return rep.clean() ? kExitOk : kExitFails;
        }

        if (*vt) {
            std::vector<EmbeddedGraph> corpus;
            if (!vt_in.empty())
                for (Graph& g : parse_graph6_lines(slurp(vt_in)))
                    corpus.push_back(EmbeddedGraph{std::move(g), std::nullopt});
            for (const std::string& path : vt_rots) {
                CombinatorialMap map = parse_rot(slurp(path));
                Graph g = map.graph();
                corpus.push_back(EmbeddedGraph{std::move(g), std::move(map)});
            }
            if (corpus.empty()) throw std::invalid_argument("provide --in and/or --rot");
            ScanReport rep =
                run_theorem_suite(corpus, GenusBudget{vt_max_maps, vt_timeout}, vt_jobs);
            out << (as_json ? report_to_json(rep).dump() + "\n" : report_to_table(rep));
            return rep.clean() ? kExitOk : kExitFails;
        }
    } catch (const budget_error& e) {
        err << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const parse_error& e) {
        err << "parse: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage; // no subcommand matched (unreachable with require_subcommand)
}

} // namespace emn
