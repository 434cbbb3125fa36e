#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <actlab/enumeration.hpp>
#include <actlab/io.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path data = ACTLAB_DATA_DIR;

struct Run {
    int code;
    std::string out;
};

// stdout only; stderr carries logs and is discarded
Run run(const std::string & args)
{
    std::string cmd = std::string("\"") + ACTLAB_CLI + "\" " + args + " 2>/dev/null";
    FILE * p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (auto n = std::fread(buf.data(), 1, buf.size(), p))
        out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string quoted(const fs::path & p)
{
    return "\"" + p.string() + "\"";
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("actlab_cli_" + std::to_string(std::random_device{}())))
    {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("analyze")
{
    auto r = run("analyze " + quoted(data / "semilattice.json"));
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["monoid"]["maximal_right_ideal"] == json{1});
    CHECK(j["monoid"]["idempotents"] == json{0, 1});
    CHECK(j["monoid"]["maximal_ideal_two_sided"] == true);

    auto z = run("analyze " + quoted(data / "z3_mult.json") + " " + quoted(data / "z3_residue_act.json"));
    REQUIRE(z.code == 0);
    auto k = json::parse(z.out);
    CHECK(k["act"]["quasi_strongly_faithful"] == true);
    CHECK(k["act"]["unique_zero"] == 0);
}

TEST_CASE("exit codes")
{
    CHECK(run("analyze " + quoted(data / "rock_paper_scissors.json")).code == 13);
    CHECK(run("analyze " + quoted(data / "no_such_file.json")).code == 3);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify --statement bogus " + quoted(data / "semilattice.json")).code == 2);

    TempDir dir;
    {
        std::ofstream(dir.path / "broken.json") << "[1, 2";
    }
    CHECK(run("analyze " + quoted(dir.path / "broken.json")).code == 4);
    // act over a different monoid than the one given
    CHECK(run("analyze " + quoted(data / "z4_mult.json") + " " + quoted(data / "theta_a_act.json")).code == 17);
}

TEST_CASE("verify")
{
    auto r = run("verify --statement all " + quoted(data / "semilattice.json") + " " + quoted(data / "theta_a_act.json"));
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    REQUIRE(j.is_array());
    for (auto & v : j)
        CHECK(v["conclusion"] != "FAIL");

    auto t = run("verify --statement nakayama_particular " + quoted(data / "semilattice.json") + " " +
        quoted(data / "trivial_act.json"));
    CHECK(t.code == 0);
    auto k = json::parse(t.out);
    REQUIRE(k.size() == 1);
    CHECK(k[0]["hypotheses"] == "FAIL");
    CHECK(k[0]["conclusion"] == "VACUOUS");

    TempDir dir;
    auto report = dir.path / "verdicts.json";
    CHECK(run("verify --statement unit_symmetry,krull_monoid " + quoted(data / "z4_mult.json") + " --report " +
              quoted(report)).code == 0);
    CHECK(actlab::parse_json_file(report).size() == 2);
}

TEST_CASE("sweep")
{
    auto r = run("sweep --max-monoid-order 2 --max-act-size 2 --no-timing");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["counterexamples"].empty());
    CHECK_FALSE(j.contains("wall_seconds"));
    CHECK(run("sweep --max-monoid-order 2 --max-act-size 2 --no-timing --workers 3").out == r.out);

    CHECK(run("sweep --max-monoid-order 2 --max-act-size 2 --instance-budget 1").code == 5);
    CHECK(run("sweep --max-monoid-order 2 --max-act-size 2 --statements nakayama_fixer --require-nonvacuous 100000")
              .code == 6);
    CHECK(run("sweep --max-monoid-order 0").code == 2);
}

TEST_CASE("enumerate round-trips through files")
{
    TempDir dir;
    REQUIRE(run("enumerate monoids --order 3 --output " + quoted(dir.path / "m")).code == 0);
    auto expected = actlab::enumerate_monoids(3);
    std::size_t files = 0;
    for (auto & entry : fs::directory_iterator(dir.path / "m")) {
        auto S = actlab::load_monoid(entry.path());
        auto match = std::find_if(expected.begin(), expected.end(), [&](auto & T) { return *T == S; });
        CHECK(match != expected.end());
        ++files;
    }
    CHECK(files == expected.size());

    REQUIRE(run("enumerate acts --monoid " + quoted(data / "semilattice.json") + " --size 3 --output " +
                quoted(dir.path / "a")).code == 0);
    auto host = std::make_shared<const actlab::FiniteMonoid>(actlab::load_monoid(data / "semilattice.json"));
    auto acts = actlab::enumerate_acts(host, 3);
    files = 0;
    for (auto & entry : fs::directory_iterator(dir.path / "a")) {
        auto A = actlab::load_act(entry.path());
        auto match = std::find_if(acts.begin(), acts.end(), [&](auto & B) { return B == A; });
        CHECK(match != acts.end());
        ++files;
    }
    CHECK(files == acts.size());
}
