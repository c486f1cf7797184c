// Runs the built command-line tool as a subprocess.

#include "momentum/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;
using momentum::json;

namespace {

struct Run {
    int code;
    std::string out, err, svg;
};

std::string read_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct ScratchDir {
    fs::path path = fs::temp_directory_path() / ("momentum_cli_test_" + std::to_string(::getpid()));
    ScratchDir() { fs::create_directories(path); }
    ~ScratchDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

Run run_cli(const std::string& request, const std::string& flags = "", bool with_svg = true) {
    static ScratchDir scratch;
    static int counter = 0;
    const fs::path& dir = scratch.path;
    std::string tag = std::to_string(counter++);
    fs::path in = dir / ("in" + tag), out = dir / ("out" + tag), err = dir / ("err" + tag), svg = dir / ("svg" + tag);
    std::ofstream(in, std::ios::binary) << request;
    std::string cmd = std::string(MOMENTUM_CLI_PATH) + (with_svg ? " --svg " + svg.string() : "") + " " + flags + " < " + in.string() +
                      " > " + out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    Run r{WEXITSTATUS(status), read_file(out), read_file(err), fs::exists(svg) ? read_file(svg) : ""};
    return r;
}

std::string request_file(const char* name) {
    return read_file(fs::path(MOMENTUM_SOURCE_DIR) / "requests" / name);
}

// Text between <g id="name" ...> and the closing </g>.
std::string svg_group(const std::string& svg, const std::string& name) {
    auto start = svg.find("<g id=\"" + name + "\"");
    if (start == std::string::npos) return "";
    return svg.substr(start, svg.find("</g>", start) - start);
}

}  // namespace

TEST(Cli, RootsA2) {
    auto r = run_cli(R"({"command": "roots", "group": "A2"})", "", false);
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["positive_roots"].size(), 3u);
    EXPECT_EQ(j["positive_roots"], json::parse(R"([["-1","2"],["1","1"],["2","-1"]])"));
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, ProjectiveSu4) {
    auto r = run_cli(request_file("su4_adjoint_sum.json"));
    ASSERT_EQ(r.code, 0) << r.err;
    auto exact = json::parse(r.out)["answer"]["exact"];
    ASSERT_FALSE(exact.is_null());
    EXPECT_EQ(exact["points"].size(), 9u);
    EXPECT_TRUE(r.svg.empty());
}

TEST(Cli, ProjectiveTrivialWeight) {
    auto r = run_cli(R"({"command": "projective", "group": "A2", "payload": {"hw": [[0, 0]]}})");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["answer"]["exact"]["points"], json::parse(R"([["0","0"]])"));
}

TEST(Cli, RenderSu3) {
    auto r = run_cli(request_file("su3_render.json"));
    ASSERT_EQ(r.code, 0) << r.err;
    std::string dark = svg_group(r.svg, "momentum-dark");
    for (const char* p : {"50.000000,259.807621", "-100.000000,173.205081", "0.000000,0.000000", "100.000000,173.205081"})
        EXPECT_NE(dark.find(p), std::string::npos) << p;
    std::string light = svg_group(r.svg, "momentum-light");
    EXPECT_NE(light.find("125.000000,216.506351"), std::string::npos);
    // pi1 is not a weight of the representation: drawn as a square
    EXPECT_NE(svg_group(r.svg, "markers").find("<rect"), std::string::npos);
    EXPECT_EQ(json::parse(r.out)["svg"], r.svg);
}

TEST(Cli, RenderLayerOrder) {
    auto r = run_cli(request_file("g2_adjoint.json"));
    ASSERT_EQ(r.code, 0) << r.err;
    std::size_t last = 0;
    for (const char* layer : {"walls", "weight-hull", "momentum-light", "momentum-dark", "markers"}) {
        auto at = r.svg.find(std::string("<g id=\"") + layer + "\"");
        ASSERT_NE(at, std::string::npos) << layer;
        EXPECT_GT(at, last);
        last = at;
    }
    std::string dark = svg_group(r.svg, "momentum-dark");
    for (const char* p : {"0.000000,0.000000", "50.000000,86.602540", "0.000000,173.205081"})
        EXPECT_NE(dark.find(p), std::string::npos) << p;
}

TEST(Cli, RenderEmptyPolytopeHasWallsOnly) {
    auto r = run_cli(R"({"command": "render", "group": "A2", "payload": {"polytope": {"dim": 2, "empty": true}}})");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(svg_group(r.svg, "walls").find("<polyline"), std::string::npos);
    EXPECT_EQ(r.svg.find("<polygon"), std::string::npos);
    EXPECT_EQ(r.svg.find("<circle"), std::string::npos);
}

TEST(Cli, ByteDeterminism) {
    for (const char* f : {"su3_render.json", "su4_adjoint_sum.json", "peter_weyl.json", "assemble_circle.json"}) {
        auto a = run_cli(request_file(f)), b = run_cli(request_file(f));
        EXPECT_EQ(a.out, b.out) << f;
        EXPECT_EQ(a.svg, b.svg) << f;
    }
    // key order in the request does not matter
    auto x = run_cli(R"({"group": "A2", "payload": {"hw": [[2, 1]]}, "command": "projective"})");
    auto y = run_cli(R"({"command": "projective", "group": "A2", "payload": {"hw": [[2, 1]]}})");
    EXPECT_EQ(x.out, y.out);
}

TEST(Cli, SvgFlagOnCommandWithoutDrawing) {
    auto r = run_cli(R"({"command": "roots", "group": "A2"})");
    EXPECT_EQ(r.code, 0);
    EXPECT_FALSE(r.out.empty());
    EXPECT_TRUE(r.svg.empty());
    EXPECT_NE(r.err.find("no drawing"), std::string::npos);
}

TEST(Cli, PrettyOutputIsTheSameDocument) {
    auto a = run_cli(request_file("peter_weyl.json"));
    auto b = run_cli(request_file("peter_weyl.json"), "--pretty");
    EXPECT_NE(a.out, b.out);
    EXPECT_EQ(json::parse(a.out), json::parse(b.out));
}

TEST(Cli, SampleRequestsSucceed) {
    for (const auto& entry : fs::directory_iterator(fs::path(MOMENTUM_SOURCE_DIR) / "requests")) {
        auto r = run_cli(read_file(entry.path()));
        bool unsupported = entry.path().filename().string().rfind("unsupported", 0) == 0;
        EXPECT_EQ(r.code, unsupported ? 4 : 0) << entry.path() << r.err;
    }
}

TEST(Cli, ExitCodes) {
    const std::vector<std::pair<std::string, int>> cases = {
        {"not json", 2},
        {R"([1, 2])", 2},
        {R"({"group": "A2"})", 2},
        {R"({"command": "launch", "group": "A2"})", 2},
        {R"({"command": "roots", "group": "Q7"})", 2},
        {R"({"command": "irrep", "group": "A2", "payload": {"hw": ["x", 1]}})", 2},
        {R"({"command": "irrep", "group": "A2", "payload": {}})", 2},
        {R"({"command": "irrep", "group": "A2", "payload": {"hw": [-1, 1]}})", 3},
        {R"({"command": "irrep", "group": "A2", "payload": {"hw": [1, 1, 1]}})", 3},
        {R"({"command": "projective", "group": "A2", "payload": {"hw": []}})", 3},
        {R"({"command": "render", "group": "A3", "payload": {"hw": [[1, 0, 0]]}})", 4},
        {R"({"command": "local-cone", "group": "A2", "payload": {"mu": [1, 1], "case": "general"}})", 4},
        {R"({"command": "local-cone", "group": "A2", "payload": {"mu": [0, 1], "case": "central-orbit"}})", 4},
    };
    for (const auto& [req, code] : cases) {
        auto r = run_cli(req);
        EXPECT_EQ(r.code, code) << req;
        EXPECT_TRUE(r.out.empty()) << req;
        EXPECT_FALSE(r.err.empty()) << req;
    }
}

TEST(Cli, UnsupportedMessagesNameTheMissingResult) {
    auto r = run_cli(R"({"command": "local-cone", "group": "A2", "payload": {"mu": [1, 1], "case": "general"}})");
    EXPECT_NE(r.err.find("Theorem"), std::string::npos);
}

TEST(Cli, InProcessDispatchMatchesSubprocess) {
    auto req = json::parse(request_file("cotangent_a3.json"));
    auto resp = momentum::cli::run(req);
    EXPECT_EQ(resp.body.dump() + "\n", run_cli(req.dump()).out);
}
