#include <turan/cli.hpp>
#include <turan/text_io.hpp>

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>

using namespace turan;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "turan");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scratch(const std::string &name)
{
    auto dir = std::filesystem::temp_directory_path() / "turan_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

} // namespace

TEST_CASE("fnv1a reference values")
{
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"bogus"}).code == kExitUsage);
    CHECK(run({"lagrangian", "/no/such/file"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("malformed input is reported")
{
    auto g = scratch("bad.txt");
    write_text_file(g, "3 4\n1 2 9\n");
    auto r = run({"lagrangian", g});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("records output is one JSON object per line")
{
    auto g = scratch("k4.txt");
    write_text_file(g, "3 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    auto r = run({"--format", "records", "lagrangian", g, "--seed", "3"});
    REQUIRE(r.code == kExitOk);
    auto record = nlohmann::json::parse(r.out);
    CHECK(record["record"] == "lagrangian");
    CHECK(record["value"].get<double>() == doctest::Approx(0.375));
}

TEST_CASE("decision exit codes")
{
    auto g = scratch("k4.txt"), p = scratch("rainbow.txt");
    write_text_file(g, "3 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    write_text_file(p, "1 2 3\n");
    CHECK(run({"satisfies", g, p}).code == kExitFailed);
    CHECK(run({"satisfies", g, p, "--max-n", "3"}).code == kExitInconclusive);
    CHECK(run({"almost-distance", g, p}).code == kExitOk);
}

TEST_CASE("construct then replay the manifest")
{
    auto e = scratch("edge.txt"), p = scratch("p6.txt"), m = scratch("m.json");
    write_text_file(e, "3 3\n1 2 3\n");
    REQUIRE(run({"build-pt", e, "--t", "6", "-o", p}).code == kExitOk);
    auto first = run({"--format", "records", "--manifest", m, "construct", p, "--n", "20", "--seed", "12"});
    REQUIRE(first.code == kExitOk);
    auto manifest = nlohmann::json::parse(read_text_file(m));
    CHECK(manifest["seed"] == 12);
    CHECK(manifest["digest"] == fnv1a_hex(first.out));
    CHECK(run({"replay", m}).code == kExitOk);

    manifest["digest"] = "0000000000000000";
    write_text_file(m, manifest.dump());
    CHECK(run({"replay", m}).code == kExitFailed);
}

TEST_CASE("construct weights are validated")
{
    auto p = scratch("p6.txt");
    write_text_file(p, "1 2 3\n1 3 2\n");
    CHECK(run({"construct", p, "--n", "10", "--weights", "1,1"}).code == kExitUsage);
    CHECK(run({"construct", p, "--n", "10", "--weights", "1,x,1"}).code == kExitUsage);
    CHECK(run({"construct", p, "--n", "10", "--weights", "2,1,1"}).code == kExitOk);
    CHECK(run({"construct", p, "--n", "10", "--weights", "1,1,1", "--optimal"}).code == kExitUsage);
}
