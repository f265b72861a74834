#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include <fps/fps.hpp>

#include "cli.hpp"

using namespace fps;

namespace
{

struct result {
    int code;
    std::string out;
    std::string err;
};

result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "fps");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

series series_of(const result &r)
{
    return series_from_json(nlohmann::json::parse(r.out));
}

class scratch
{
public:
    scratch() : m_dir(std::filesystem::temp_directory_path() / "fps_cli_test")
    {
        std::filesystem::create_directories(m_dir);
    }
    ~scratch()
    {
        std::filesystem::remove_all(m_dir);
    }
    std::string file(const std::string &name, const series &s) const
    {
        const auto path = m_dir / name;
        write_text_file(path, to_json(s).dump());
        return path.string();
    }
    std::string path(const std::string &name) const
    {
        return (m_dir / name).string();
    }

private:
    std::filesystem::path m_dir;
};

} // namespace

TEST_CASE("compose with the geometric series")
{
    const scratch s;
    const auto in = s.file("half_plus_z.json", parse_series_expr("1/2 + z @1"));
    const auto r = run({"compose", "--outer", "geometric", "--in", in, "--order", "8"});
    REQUIRE(r.code == 0);
    const auto c = series_of(r);
    REQUIRE(c.order() == 8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(c[n] == coefficient::integer(2L << n, mode::exact));
    }
}

TEST_CASE("revert")
{
    const scratch s;
    const auto in = s.file("z_plus_z2.json", parse_series_expr("z + z^2 @2"));
    const auto r = run({"revert", "--in", in, "--order", "4"});
    REQUIRE(r.code == 0);
    CHECK(series_of(r) == series::from_integers({0, 1, -1, 2, -5}));

    const auto csv = run({"revert", "--in", in, "--order", "2", "--format", "csv"});
    CHECK(csv.out == "0,0/1,0/1\n1,1/1,0/1\n2,-1/1,0/1\n");
}

TEST_CASE("exit codes")
{
    const auto gct = run({"gct", "--outer", "factorial", "--a0", "0.5"});
    CHECK(gct.code == 3);
    CHECK(gct.err.find("fails_at_k=0") != std::string::npos);
    CHECK(nlohmann::json::parse(gct.out)["fails_at_k"] == 0);

    CHECK(run({"gct", "--outer", "geometric", "--a0", "1/2"}).code == 0);
    CHECK(run({"compose", "--outer", "factorial", "--in", "expr:1/2+z @3"}).code == 3);
    CHECK(run({"revert", "--in", "/nonexistent/f.json"}).code == 1);
    CHECK(run({"revert", "--in", "expr:1+z @3"}).code == 2);
    CHECK(run({"revert", "--in", "expr:z+"}).code == 2);
    CHECK(run({"frobnicate", "--in", "/nonexistent/f.json"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"revert", "--in", "expr:z @3", "--mode", "double"}).code == 2);
    CHECK(run({"revert", "--in", "expr:z @3", "--order", "0"}).code == 2);

    const scratch s;
    std::ofstream(s.path("bad.json")) << "[1, 2";
    CHECK(run({"revert", "--in", s.path("bad.json")}).code == 1);
}

TEST_CASE("round trip through files")
{
    const scratch s;
    const auto out = s.path("r.json");
    REQUIRE(run({"eval", "--expr", "1/3 + 2/7 z - (1/5)i z^2 @5", "--out", out}).code == 0);
    const auto first = read_text_file(out);
    REQUIRE(run({"eval", "--in", out, "--out", s.path("r2.json")}).code == 0);
    CHECK(read_text_file(s.path("r2.json")) == first);
}

TEST_CASE("other verbs")
{
    const auto bracket = run({"bracket", "--f", "expr:z^2 @4", "--g", "expr:z^3 @4"});
    REQUIRE(bracket.code == 0);
    CHECK(series_of(bracket) == series::from_integers({0, 0, 0, 0, 1}));

    const auto conj = run({"conjugate", "--g", "expr:2z @2", "--f", "expr:z+z^2 @2"});
    REQUIRE(conj.code == 0);
    CHECK(series_of(conj) == parse_series_expr("z + 1/2 z^2 @2"));

    const auto matrix = run({"matrix", "--in", "expr:z+z^2 @4", "--rows", "2"});
    REQUIRE(matrix.code == 0);
    const auto rows = nlohmann::json::parse(matrix.out)["rows"];
    CHECK(rows.size() == 3);
    CHECK(rows[2][3][0] == "2/1");

    const auto metric = run({"metric", "--f", "expr:0 @3", "--g", "expr:z @3"});
    REQUIRE(metric.code == 0);
    CHECK(nlohmann::json::parse(metric.out)["exact"] == "1/4");

    const auto leftinv = run({"leftinv", "--in", "expr:2+3z @1"});
    REQUIRE(leftinv.code == 0);
    const auto report = nlohmann::json::parse(leftinv.out);
    CHECK(report["existence"] == "proved-finite");
    CHECK(series_from_json(report["candidate"]) == parse_series_expr("-2/3 + 1/3 z @1"));

    const scratch s;
    const auto with_report = run({"leftinv", "--in", "expr:1+z+z^2 @8", "--report", s.path("rep.json")});
    REQUIRE(with_report.code == 0);
    CHECK(series_of(with_report).order() == 8);
    CHECK(nlohmann::json::parse(read_text_file(s.path("rep.json")))["existence"] == "heuristic-no");

    const auto probe = run({"probe-derivative", "--outer", "geometric", "--base", "expr:1/2+z @10", "--dir",
                            "expr:1+z @10", "--mode", "float", "--coefficients", "8"});
    REQUIRE(probe.code == 0);
    const double slope = nlohmann::json::parse(probe.out)["slope"];
    CHECK(slope == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("default order from the environment")
{
    ::setenv("FPS_DEFAULT_ORDER", "3", 1);
    const auto r = run({"eval", "--expr", "1/(1-z)"});
    CHECK(r.code == 0);
    CHECK(series_of(r) == series::from_integers({1, 1, 1, 1}));
    ::setenv("FPS_DEFAULT_ORDER", "three", 1);
    CHECK(run({"eval", "--expr", "1/(1-z)"}).code == 2);
    ::unsetenv("FPS_DEFAULT_ORDER");
}
