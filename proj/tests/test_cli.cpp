#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "pcc/families.hpp"
#include "pcc/io.hpp"
#include "pcc/verify.hpp"

using namespace pcc;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("pcc_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(file(name)) << text;
        return file(name);
    }

private:
    fs::path path_;
};

}  // namespace

TEST_CASE("color a wheel") {
    TempDir dir;
    const auto r = run({"color", "--family", "wheel", "--n", "9", "--ell", "2", "-o", dir.file("w9.pcc")});
    CHECK(r.code == 0);
    CHECK(r.out.find("colors 3") != std::string::npos);
    CHECK(r.out.find("verified true") != std::string::npos);
    const Graph w9 = wheel_graph(9);
    const auto c = read_coloring(read_file(dir.file("w9.pcc")), w9);
    CHECK(c.distinct_colors() == 3);
    CHECK(verify_coloring(w9, c, 2).ok());
}

TEST_CASE("verify reports the failing pair") {
    TempDir dir;
    const auto g = dir.write("p4.edges", "4 3\n0 1\n1 2\n2 3\n");
    const auto bad = dir.write("bad.pcc", "0 1 1\n1 2 2\n2 3 1\n");
    const auto r = run({"verify", "--graph", g, "--coloring", bad, "--ell", "2"});
    CHECK(r.code == 1);
    CHECK(r.out == "verified false\nfailing_pair 0 3\n");
    const auto ok = run({"verify", "--graph", g, "--coloring", bad, "--ell", "1"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "verified true\n");
}

TEST_CASE("exact on C4") {
    TempDir dir;
    const auto g = dir.write("c4.edges", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    const auto r = run({"exact", "--graph", g, "--ell", "2", "--max-colors", "4", "--witness", dir.file("w.pcc")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("min_colors 2\n", 0) == 0);
    const Graph c4 = read_graph(read_file(g));
    CHECK(verify_coloring(c4, read_coloring(read_file(dir.file("w.pcc")), c4), 2).ok());

    const auto capped = run({"exact", "--graph", g, "--ell", "2", "--max-colors", "1"});
    CHECK(capped.code == 1);
    CHECK(capped.out.find("min_colors inconclusive") != std::string::npos);
    CHECK(capped.out.find("exhausted_levels 1") != std::string::npos);
}

TEST_CASE("generate then color from a file") {
    TempDir dir;
    CHECK(run({"generate", "--family", "double_star", "--a", "3", "--b", "4", "-o", dir.file("ds.edges")}).code == 0);
    CHECK(read_graph(read_file(dir.file("ds.edges"))) == double_star_graph(3, 4));
    const auto r = run({"color", "--input", dir.file("ds.edges"), "--method", "tree", "--ell", "2", "-o",
                        dir.file("ds.pcc")});
    CHECK(r.code == 0);
    CHECK(r.out.find("colors 6") != std::string::npos);
    CHECK(run({"verify", "--graph", dir.file("ds.edges"), "--coloring", dir.file("ds.pcc"), "--ell", "2"}).code == 0);

    CHECK(run({"generate", "--family", "path", "--n", "2", "-o", dir.file("p2.edges")}).code == 0);
    CHECK(run({"generate", "--family", "path", "--n", "9", "-o", dir.file("p9.edges")}).code == 0);
    const auto j = run({"color", "--input", dir.file("p2.edges"), "--method", "join", "--second", dir.file("p9.edges"),
                        "--ell", "2", "--graph-out", dir.file("j.edges"), "-o", dir.file("j.pcc")});
    CHECK(j.code == 0);
    CHECK(j.out.find("claimed 3") != std::string::npos);
    CHECK(run({"verify", "--graph", dir.file("j.edges"), "--coloring", dir.file("j.pcc"), "--ell", "2"}).code == 0);

    CHECK(run({"generate", "--family", "path", "--n", "4", "-o", dir.file("p4.edges")}).code == 0);
    const auto p = run({"color", "--input", dir.file("p4.edges"), "--method", "permutation", "--perm", "2,4,1,3",
                        "--ell", "2", "--graph-out", dir.file("perm.edges"), "-o", dir.file("perm.pcc")});
    CHECK(p.code == 0);
    CHECK(run({"verify", "--graph", dir.file("perm.edges"), "--coloring", dir.file("perm.pcc"), "--ell", "2"}).code ==
          0);
    const auto cart = run({"color", "--input", dir.file("p2.edges"), "--method", "cartesian", "--second",
                           dir.file("p4.edges"), "--ell", "2"});
    CHECK(cart.code == 0);
    CHECK(cart.out.find("verified true") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
    TempDir dir;
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"color", "--family", "wheel", "--n", "9"}).code == 2);
    CHECK(run({"color", "--family", "teapot", "--n", "9", "--ell", "2"}).code == 2);
    CHECK(run({"color", "--family", "wheel", "--n", "2", "--ell", "2"}).code == 2);
    CHECK(run({"verify", "--graph", dir.file("missing"), "--coloring", dir.file("missing"), "--ell", "2"}).code == 2);
    const auto g = dir.write("bad.edges", "3 2\n0 1\n");
    const auto r = run({"exact", "--graph", g, "--ell", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("bad.edges") != std::string::npos);
    CHECK(run({"color", "--input", g, "--ell", "2"}).code == 2);
    CHECK(run({"generate", "--family", "complete_multipartite", "--parts", "3,1,2", "-o", dir.file("x")}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table output") {
    TempDir dir;
    const std::vector<std::string> args{"table", "--theorem", "wheel", "--n-min", "3", "--n-max", "8", "-o",
                                        dir.file("a.csv")};
    CHECK(run(args).code == 0);
    auto second = args;
    second.back() = dir.file("b.csv");
    CHECK(run(second).code == 0);
    const std::string a = read_file(dir.file("a.csv"));
    CHECK(a == read_file(dir.file("b.csv")));
    CHECK(a.rfind("params,ell,claimed,verified,exact_lower_bound,status\n", 0) == 0);
    CHECK(a.find("FAIL") == std::string::npos);
    CHECK(a.find("n=7,2,3,true,3,ok") != std::string::npos);

    for (const char* theorem : {"bipartite", "multipartite", "cube", "tree"}) {
        const auto r = run({"table", "--theorem", theorem});
        CHECK(r.code == 0);
        CHECK(r.out.find(",FAIL") == std::string::npos);
        CHECK(r.out == run({"table", "--theorem", theorem}).out);
    }
    CHECK(run({"table", "--theorem", "nonsense"}).code == 2);
}
