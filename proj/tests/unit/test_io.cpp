#include <doctest.h>

#include <filesystem>

#include <nlohmann/json.hpp>

#include <fps/fps.hpp>

#include "random_series.hpp"

using namespace fps;
using fps::testing::generator;
using fps::testing::q;

TEST_CASE("expression parser")
{
    CHECK(parse_series_expr("z + z^2 @4") == series::from_integers({0, 1, 1, 0, 0}));
    CHECK(parse_series_expr("(1-z)^2 @3") == series::from_integers({1, -2, 1, 0}));
    CHECK(parse_series_expr("1/2 + z @2") == series(std::vector{q(1, 2), q(1), q(0)}));
    CHECK(parse_series_expr("3z^2", 3) == series::from_integers({0, 0, 3, 0}));
    CHECK(parse_series_expr("1/(1-z) @4") == series::from_integers({1, 1, 1, 1, 1}));
    CHECK(parse_series_expr("0.25 + 1e-1 z @1") == series(std::vector{q(1, 4), q(1, 10)}));
    CHECK(parse_series_expr("(1+i) z @1") == series(std::vector{q(0), coefficient::complex(1, 1, mode::exact)}));
    CHECK(parse_coefficient_expr("-3/4") == q(-3, 4));
}

TEST_CASE("expression parser errors")
{
    const auto offset_of = [](const char *text) -> long {
        try {
            (void)parse_series_expr(text);
        } catch (const parse_error &e) {
            CHECK(e.kind() == error_kind::parse_error);
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("z +") == 3);
    CHECK(offset_of("z ^ x @2") == 4);
    CHECK(offset_of("(z @2") >= 0);
    CHECK(offset_of("z") >= 0); // no order given
    CHECK(offset_of("1/z @2") >= 0);
    CHECK_THROWS_AS((void)parse_coefficient_expr("z"), error);
}

TEST_CASE("JSON round trip")
{
    generator gen(71);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = gen.any_series(gen.uniform(0, 12));
        const auto text = to_json(f).dump();
        const auto back = series_from_json(nlohmann::json::parse(text));
        CHECK(back == f);
        CHECK(to_json(back).dump() == text);
    }

    const auto floating = parse_series_expr("0.1 + 1/3 z @2").to_mode(mode::floating);
    const auto back = series_from_json(nlohmann::json::parse(to_json(floating).dump()));
    for (int n = 0; n <= 2; ++n) {
        CHECK(back[n].to_complex() == floating[n].to_complex());
    }
}

TEST_CASE("JSON layout")
{
    const auto j = to_json(series(std::vector{q(1, 2), coefficient::complex(0, -1, mode::exact)}));
    CHECK(j["mode"] == "exact");
    CHECK(j["order"] == 1);
    CHECK(j["coeffs"][0][0] == "1/2");
    CHECK(j["coeffs"][1][1] == "-1/1");
    CHECK(to_csv(series::from_integers({1, 2})) == "0,1/1,0/1\n1,2/1,0/1\n");
}

TEST_CASE("malformed JSON")
{
    const auto kind_of = [](const char *text) {
        try {
            (void)series_from_json(nlohmann::json::parse(text));
        } catch (const error &e) {
            return e.kind();
        }
        return error_kind::invalid_argument;
    };
    CHECK(kind_of(R"({"mode":"exact","order":1,"coeffs":[["1/1","0/1"]]})") == error_kind::malformed_input);
    CHECK(kind_of(R"({"mode":"exact","order":0,"coeffs":[["x","0/1"]]})") == error_kind::malformed_input);
    CHECK(kind_of(R"({"mode":"other","order":0,"coeffs":[[1,0]]})") == error_kind::malformed_input);
    CHECK(kind_of(R"({"order":0,"coeffs":[[1,0]]})") == error_kind::malformed_input);
}

TEST_CASE("files")
{
    const auto dir = std::filesystem::temp_directory_path() / "fps_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "f.json";
    const auto f = series::from_integers({1, 2, 3});
    write_text_file(path, to_json(f).dump());
    CHECK(read_series_file(path) == f);
    try {
        (void)read_series_file(dir / "missing.json");
        FAIL("expected an error");
    } catch (const error &e) {
        CHECK(e.kind() == error_kind::io);
    }
    write_text_file(path, "{not json");
    try {
        (void)read_series_file(path);
        FAIL("expected an error");
    } catch (const error &e) {
        CHECK(e.kind() == error_kind::malformed_input);
    }
    std::filesystem::remove_all(dir);
}
