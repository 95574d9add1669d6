#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "emn/cli.hpp"
#include "emn/embedding.hpp"
#include "emn/graph.hpp"
#include "fixtures.hpp"

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = emn::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "cli_test_tmp_" + std::to_string(counter++) + ".txt";
        std::ofstream f(path);
        f << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("emn-check matches the documented example output") {
    CliRun r = run({"--format", "json", "emn-check", "--g6", "C~", "--m", "0", "--n", "0"});
    CHECK(r.status == 0);
    CHECK(r.out == "{\"outcome\":\"Holds\"}\n");
    CHECK(r.err.empty());
}

TEST_CASE("emn-check reports a witness and exits 1 on failure") {
    std::string c6 = emn::write_graph6(emn::generate_family("cycle", {6}));
    CliRun s = run({"--format", "json", "emn-check", "--g6", c6, "--m", "2", "--n", "0"});
    CHECK(s.status == 1);
    CHECK(s.out.find("\"outcome\":\"Fails\"") != std::string::npos);
    CHECK(s.out.find("\"witness\":{\"m\":[[0,1],[3,4]],\"n\":[]}") != std::string::npos);
}

TEST_CASE("extendable is E(m,0)") {
    std::string c6 = emn::write_graph6(emn::generate_family("cycle", {6}));
    CHECK(run({"extendable", "--g6", c6, "--m", "1"}).status == 0);
    CHECK(run({"extendable", "--g6", c6, "--m", "2"}).status == 1);
}

TEST_CASE("pm emits a valid constrained matching or absent") {
    std::string c6 = emn::write_graph6(emn::generate_family("cycle", {6}));
    CliRun r = run({"--format", "json", "pm", "--g6", c6, "--force", "0,1", "--forbid",
                    "3,4"});
    CHECK(r.status == 0);
    CHECK(r.out == "{\"outcome\":\"present\",\"matching\":[[0,1],[2,3],[4,5]]}\n");

    std::string k4 = "C~";
    CliRun absent =
        run({"--format", "json", "pm", "--g6", k4, "--force", "0,1", "--forbid", "2,3"});
    CHECK(absent.status == 0);
    CHECK(absent.out == "{\"outcome\":\"absent\"}\n");

    CliRun table = run({"pm", "--g6", c6, "--force", "0,1", "--forbid", "3,4"});
    CHECK(table.out == "0-1 2-3 4-5\n");

    CHECK(run({"pm", "--g6", k4, "--force", "0,9"}).status == 2);
}

// every "present" answer must cover all vertices, contain the forced edges
// and avoid the forbidden ones
TEST_CASE("pm output validator") {
    struct Case {
        std::string family;
        std::vector<int> params;
        std::vector<std::string> force, forbid;
    };
    std::vector<Case> cases{
        {"cycle", {8}, {"0,1"}, {"4,5"}},
        {"complete", {6}, {"0,3", "1,4"}, {"2,5"}},
        {"q3", {}, {"0,1"}, {"6,7"}},
        {"petersen", {}, {}, {"0,5", "1,2"}},
        {"join-counterexample", {3}, {"0,1"}, {"2,3"}},
    };
    for (const Case& c : cases) {
        emn::Graph g = emn::generate_family(c.family, c.params);
        std::vector<std::string> args{"--format", "json", "pm", "--g6",
                                      emn::write_graph6(g)};
        for (const std::string& f : c.force) {
            args.push_back("--force");
            args.push_back(f);
        }
        for (const std::string& f : c.forbid) {
            args.push_back("--forbid");
            args.push_back(f);
        }
        CliRun r = run(args);
        REQUIRE(r.status == 0);
        if (r.out.find("\"absent\"") != std::string::npos) continue;
        auto extract_pairs = [](const std::string& text) {
            std::vector<std::pair<int, int>> out;
            for (std::size_t i = 0; i + 1 < text.size(); ++i)
                if (text[i] == '[' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                    int u = 0, v = 0;
                    std::size_t j = i + 1;
                    for (; std::isdigit(static_cast<unsigned char>(text[j])); ++j)
                        u = u * 10 + (text[j] - '0');
                    if (text[j] != ',') continue;
                    for (++j; std::isdigit(static_cast<unsigned char>(text[j])); ++j)
                        v = v * 10 + (text[j] - '0');
                    if (text[j] == ']') out.emplace_back(u, v);
                }
            return out;
        };
        auto pairs = extract_pairs(r.out);
        std::vector<bool> covered(g.vertex_count(), false);
        for (auto [u, v] : pairs) {
            CHECK(g.has_edge(u, v));
            CHECK_FALSE(covered[u]);
            CHECK_FALSE(covered[v]);
            covered[u] = covered[v] = true;
        }
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(covered[v]);
        auto has_pair = [&](const std::string& text) {
            auto comma = text.find(',');
            int u = std::stoi(text.substr(0, comma));
            int v = std::stoi(text.substr(comma + 1));
            for (auto [a, b] : pairs)
                if ((a == u && b == v) || (a == v && b == u)) return true;
            return false;
        };
        for (const std::string& f : c.force) CHECK(has_pair(f));
        for (const std::string& f : c.forbid) CHECK_FALSE(has_pair(f));
    }
}

TEST_CASE("mu threshold claim3") {
    // global flags may trail the subcommand
    CHECK(run({"emn-check", "--g6", "C~", "--m", "0", "--n", "0", "--format", "json"}).out ==
          "{\"outcome\":\"Holds\"}\n");
    CliRun r = run({"mu", "--orientable", "--genus", "1"});
    CHECK(r.status == 0);
    CHECK(r.out == "4\n");
    CHECK(run({"mu", "--non-orientable", "--genus", "1"}).out == "3\n");
    CHECK(run({"mu", "--orientable", "--non-orientable", "--genus", "1"}).status == 2);
    CHECK(run({"--format", "json", "mu", "--orientable", "--genus", "0"}).out ==
          "{\"mu\":3}\n");

    CHECK(run({"threshold", "--orientable", "--genus", "2", "--k", "4"}).out == "9\n");
    CHECK(run({"threshold", "--orientable", "--genus", "1", "--k", "3"}).status == 2);

    CHECK(run({"claim3", "--non-orientable", "--genus", "3"}).out == "true\n");
    CHECK(run({"claim3", "--orientable", "--genus", "0"}).status == 2); // chi > -1
}

TEST_CASE("gen and enumerate") {
    CHECK(run({"gen", "--family", "complete", "--param", "4"}).out == "C~\n");
    CHECK(run({"gen", "--family", "nonesuch"}).status == 2);

    CliRun six = run({"enumerate", "--n", "4"});
    CHECK(six.status == 0);
    int lines = 0;
    for (char c : six.out)
        if (c == '\n') ++lines;
    CHECK(lines == 6);

    CHECK(run({"enumerate", "--n", "9"}).status == 3); // budget
}

TEST_CASE("genus subcommand") {
    std::string k5 = emn::write_graph6(emn::generate_family("complete", {5}));
    CliRun r = run({"--format", "json", "genus", "--g6", k5, "--kind", "orientable"});
    CHECK(r.status == 0);
    CHECK(r.out.find("\"genus\":1") != std::string::npos);
    CHECK(r.out.find("\"witness\":\"5 10\\n") != std::string::npos);

    CliRun budget = run({"genus", "--g6", k5, "--kind", "orientable", "--max-rotations", "10"});
    CHECK(budget.status == 3);
    CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("faces subcommand reads rot files") {
    TempFile rot(emn::write_rot(fixtures::k4_planar()));
    CliRun r = run({"--format", "json", "faces", "--rot", rot.path});
    CHECK(r.status == 0);
    CHECK(r.out.find("\"face_count\":4") != std::string::npos);
    CHECK(r.out.find("\"chi\":2") != std::string::npos);
    CHECK(r.out.find("\"phi\":[\"1/2\",\"1/2\",\"1/2\",\"1/2\"]") != std::string::npos);

    TempFile bad("3 2\n0: 1\n1: 0 2\n2: 1\nsign 0 2 -1\n");
    CHECK(run({"faces", "--rot", bad.path}).status == 2);
}

TEST_CASE("signed genus witness round-trips through faces") {
    std::string k5 = emn::write_graph6(emn::generate_family("complete", {5}));
    CliRun g = run({"--format", "json", "genus", "--g6", k5, "--kind", "non-orientable"});
    REQUIRE(g.status == 0);
    CHECK(g.out.find("\"genus\":1") != std::string::npos);
    auto pos = g.out.find("\"witness\":\"");
    REQUIRE(pos != std::string::npos);
    std::string rot_text;
    for (std::size_t i = pos + 11; g.out[i] != '"'; ++i) {
        if (g.out[i] == '\\' && g.out[i + 1] == 'n') {
            rot_text += '\n';
            ++i;
        } else {
            rot_text += g.out[i];
        }
    }
    CHECK(rot_text.find("sign ") != std::string::npos);
    TempFile rot(rot_text);
    CliRun f = run({"--format", "json", "faces", "--rot", rot.path});
    CHECK(f.status == 0);
    CHECK(f.out.find("\"orientable\":false") != std::string::npos);
    CHECK(f.out.find("\"genus\":1") != std::string::npos);
    CHECK(f.out.find("\"chi\":1") != std::string::npos);
}

TEST_CASE("verify-lemmas clean run and determinism") {
    CliRun a = run({"--format", "json", "verify-lemmas", "--all-connected", "5"});
    CHECK(a.status == 0);
    CliRun b = run({"--format", "json", "verify-lemmas", "--all-connected", "5"});
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"violations\":[]") != std::string::npos);

    TempFile corpus("C~\nBg\n");
    CliRun c = run({"verify-lemmas", "--in", corpus.path});
    CHECK(c.status == 0);
}

TEST_CASE("verify-theorems over fixture embeddings") {
    TempFile ico(emn::write_rot(fixtures::icosahedron_planar()));
    TempFile q3(emn::write_rot(fixtures::q3_planar()));
    CliRun r = run({"--format", "json", "verify-theorems", "--rot", ico.path, "--rot",
                    q3.path});
    CHECK(r.status == 0);
    CHECK(r.out.find("\"violations\":[]") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"emn-check", "--m", "0", "--n", "0"}).status == 2); // no input
    CHECK(run({"emn-check", "--g6", "C~", "--in", "x", "--m", "0", "--n", "0"}).status ==
          2); // both inputs
    CHECK(run({"emn-check", "--g6", "notgraph6!!", "--m", "0", "--n", "0"}).status == 2);
    CHECK(run({"--help"}).status == 0);
}
