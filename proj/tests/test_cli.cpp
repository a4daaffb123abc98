#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

#include "json.hpp"
#include "support.hpp"

using namespace gkt;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    json doc;
};

Run gkctl(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + GKCTL_PATH + std::string(" ") + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.doc = json::parse(r.out, nullptr, false);
    return r;
}

std::string fx(const std::string& name) { return fixture(name); }

std::string temp_file(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

} // namespace

TEST_CASE("inspect the toda graph") {
    auto r = gkctl("inspect " + fx("toda.json") + " --abel");
    CHECK(r.code == 0);
    REQUIRE_FALSE(r.doc.is_discarded());
    CHECK(r.doc["zigzags"].size() == 4);
    CHECK(r.doc["polygon"]["vertices"] == json::parse("[[0,0],[1,-1],[2,0],[1,1]]"));
    CHECK(r.doc["polygon"]["genus"] == 1);
    CHECK(r.doc["minimal"] == true);
    CHECK(r.doc["simple"] == true);
    CHECK(r.doc["violations"].empty());
    CHECK(r.doc["abel"]["faces"].size() == 4);
    CHECK(r.doc["kasteleyn"].size() == 8);
}

TEST_CASE("inspect the honeycomb") {
    auto r = gkctl("inspect " + fx("honeycomb.json"));
    CHECK(r.code == 0);
    CHECK(r.doc["zigzags"].size() == 3);
    CHECK(r.doc["polygon"]["vertices"].size() == 3);
    CHECK(r.doc["polygon"]["genus"] == 0);
}

TEST_CASE("input errors exit with code 2") {
    auto r = gkctl("inspect " + fx("broken.json"));
    CHECK(r.code == 2);
    CHECK(r.doc["error"] == "NotBipartite");

    CHECK(gkctl("inspect /nonexistent/graph.json").doc["error"] == "FileError");

    auto path = temp_file("gk_cli_bad.json");
    save_text(path, "{\n  \"vertices\": [\n  oops\n}\n");
    auto bad = gkctl("inspect " + path);
    CHECK(bad.code == 2);
    CHECK(bad.doc["error"] == "ParseError");
    CHECK(bad.doc["message"].get<std::string>().find("line 3") != std::string::npos);
    std::filesystem::remove(path);

    CHECK(gkctl("mutate " + fx("dp0.json") + " --face 0").code == 2);
    CHECK(gkctl("flow " + fx("toda.json") + " --xyzw 1,2").code == 2);
    CHECK(gkctl("no-such-command").code == 2);
    CHECK(gkctl("verify fay", "GK_TOLERANCE_PROFILE=bogus").code == 2);
}

TEST_CASE("verify fay is deterministic") {
    auto a = gkctl("verify fay --n 5 --seed 7");
    auto b = gkctl("verify fay --n 5 --seed 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.doc["max_residual"].get<double>() < 1e-9);
    CHECK(a.doc["instances"].size() == 10);
    auto strict = gkctl("verify fay --n 5 --seed 7", "GK_TOLERANCE_PROFILE=strict");
    CHECK(strict.doc["threshold"].get<double>() == doctest::Approx(1e-11));
}

TEST_CASE("verify roundtrip on the toda graph") {
    auto r = gkctl("verify roundtrip --graph " + fx("toda.json") +
                   " --tau 0.3+1.1i --a 0.23+0.11i --t 0.41+0.37i --samples 20");
    CHECK(r.code == 0);
    CHECK(r.doc["samples"].size() == 20);
    CHECK(r.doc["max_residual"].get<double>() < 1e-8);
}

TEST_CASE("verify mutation in exact arithmetic") {
    auto r = gkctl("verify mutation --graph " + fx("toda.json") + " --exact");
    CHECK(r.code == 0);
    CHECK(r.doc["pass"] == true);
    for (const auto& m : r.doc["moves"]) CHECK(m["curve"] == true);
}

TEST_CASE("curve, mutate and flow") {
    auto c = gkctl("curve " + fx("toda.json") + " " + fx("toda_weights.json"));
    CHECK(c.code == 0);
    CHECK(c.doc["curve"]["mode"] == "exact");
    CHECK(c.doc["polygon"]["interior"] == 1);

    auto m = gkctl("mutate " + fx("toda.json") + " --face 1 --weights " + fx("toda_weights.json"));
    CHECK(m.code == 0);
    CHECK(m.doc["weights_agree"] == true);
    CHECK(m.doc["curve_unchanged"] == true);
    CHECK(m.doc["exchange_matrix"]["rule_agrees"] == true);

    auto f = gkctl("flow " + fx("toda.json") + " --xyzw 2,3,1/6,1 --steps 10 --report-conserved");
    CHECK(f.code == 0);
    CHECK(f.doc["rows"].size() == 11);
    CHECK(f.doc["rows"][1][1] == "1/3");
    CHECK(f.doc["conserved"] == true);
}

TEST_CASE("reconstructed weights feed the curve command") {
    auto path = temp_file("gk_cli_weights.json");
    auto r = gkctl("reconstruct --graph " + fx("toda.json") + " --a 0.23+0.11i --t 0.41+0.37i -o " + path);
    CHECK(r.code == 0);
    CHECK(r.doc["product_residual"].get<double>() < 1e-9);
    auto c = gkctl("curve " + fx("toda.json") + " " + path);
    CHECK(c.code == 0);
    CHECK(c.doc["curve"]["mode"] == "float");
    CHECK(c.doc["curve"]["terms"].size() == 5);
    std::filesystem::remove(path);
}
