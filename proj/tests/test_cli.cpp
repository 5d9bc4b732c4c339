#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Run run(const std::string& args) {
    fs::create_directories(EPG_SCRATCH);
    const fs::path out = fs::path(EPG_SCRATCH) / "stdout.txt";
    const fs::path err = fs::path(EPG_SCRATCH) / "stderr.txt";
    const std::string cmd = std::string("\"") + EPG_CLI + "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = 0; (pos = text.find(needle, pos)) != std::string::npos; pos += needle.size()) ++n;
    return n;
}

std::string data(const std::string& name) { return std::string(EPG_TEST_DATA) + "/" + name; }
std::string scratch(const std::string& name) { return (fs::path(EPG_SCRATCH) / name).string(); }

}  // namespace

TEST_CASE("gen-group") {
    auto r = run("gen-group cyclic 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("order 6\n") != std::string::npos);
    CHECK(r.out.find("element-orders 1:1 2:1 3:2 6:2\n") != std::string::npos);

    r = run("gen-group q 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("order 8\n") != std::string::npos);
    CHECK(r.out.find("involutions 1\n") != std::string::npos);

    r = run("gen-group cyclic 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("order 1\n") != std::string::npos);

    r = run("gen-group --table " + data("klein4.csv"));
    CHECK(r.code == 0);
    CHECK(r.out.find("element-orders 1:1 2:3\n") != std::string::npos);

    r = run("gen-group q 2");
    CHECK(r.code == 2);
    CHECK(r.err.find("exponent") != std::string::npos);
}

TEST_CASE("graph export") {
    auto r = run("power-graph dihedral 6 --dot");
    CHECK(r.code == 0);
    CHECK(count(r.out, " -- ") == 19);
    CHECK(count(r.out, "[label=") == 12);
    CHECK(run("power-graph dihedral 6 --dot").out == r.out);

    r = run("enhanced cyclic 6");
    CHECK(r.code == 0);
    CHECK(count(r.out, "\nedge ") == 15);

    r = run("power-graph cyclic 4");
    CHECK(count(r.out, "\nedge ") == 6);

    r = run("enhanced dihedral 6 --format dot --mark-diff");
    CHECK(count(r.out, " -- ") == 21);
    CHECK(count(r.out, "style=dotted") == 2);

    r = run("power-graph cyclic 4 --out /nonexistent-dir/x.epg");
    CHECK(r.code == 2);
}

TEST_CASE("reconstruct") {
    auto r = run("reconstruct " + data("figure1.epg"));
    CHECK(r.code == 0);
    CHECK(r.out.find("# added-edges 2\n") != std::string::npos);
    CHECK(r.out.find("# added 7 8 witness 10 (v8 ~ v9 via v11)\n") != std::string::npos);
    CHECK(r.out.find("# added 7 9 witness 10 (v8 ~ v10 via v11)\n") != std::string::npos);
    CHECK(run("reconstruct " + data("figure1.epg")).out == r.out);

    r = run("reconstruct " + data("k4.epg"));
    CHECK(r.out.find("# input-class complete\n") != std::string::npos);
    CHECK(r.out.find("# added-edges 0\n") != std::string::npos);

    REQUIRE(run("power-graph cyclic 6 --out " + scratch("c6.epg")).code == 0);
    r = run("reconstruct " + scratch("c6.epg") + " --out " + scratch("c6-enhanced.epg"));
    CHECK(r.code == 0);
    const auto text = slurp(scratch("c6-enhanced.epg"));
    CHECK(text.find("# input-class cyclic-non-prime-power\n") != std::string::npos);
    CHECK(count(text, "\nedge ") == 15);

    std::ofstream(scratch("bad.epg")) << "epg-graph 1\nvertices 3\nedge 2 1\n";
    r = run("reconstruct " + scratch("bad.epg"));
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("diff") {
    auto r = run("diff " + data("figure1.epg"));
    CHECK(r.code == 0);
    CHECK(r.out.find("vertices 3\n") != std::string::npos);
    CHECK(count(r.out, "\nedge ") == 2);
    CHECK(r.out.find("label 0 v8\n") != std::string::npos);
    CHECK(r.out.find("# original-vertices 7 8 9\n") != std::string::npos);

    r = run("diff " + data("k8.epg"));
    CHECK(r.out.find("vertices 0\n") != std::string::npos);

    REQUIRE(run("power-graph symmetric 3 --out " + scratch("s3.epg")).code == 0);
    r = run("diff " + scratch("s3.epg"));
    CHECK(r.out.find("vertices 0\n") != std::string::npos);
}

TEST_CASE("twins") {
    const auto r = run("twins " + data("figure1.epg"));
    CHECK(r.code == 0);
    CHECK(r.out.find("8 v9 2\n") != std::string::npos);
    CHECK(r.out.find("7 v8 1\n") != std::string::npos);
}

TEST_CASE("verify") {
    auto r = run("verify --max-order 24");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run("verify --family q --max-order 32");
    CHECK(r.code == 0);
    CHECK(r.out.find("summary 3/3 groups passed") != std::string::npos);
    CHECK(r.out.find("PASS   Q8         8      non-cyclic               2    2") != std::string::npos);

    r = run("verify --max-order 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("summary 1/1") != std::string::npos);

    CHECK(run("verify --max-order 1000").code == 2);
    CHECK(run("verify --family banana").code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("power-graph").code == 2);
    CHECK(run("--help").code == 0);
}
