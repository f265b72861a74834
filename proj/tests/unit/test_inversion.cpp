#include <doctest.h>

#include <fps/fps.hpp>

#include "random_series.hpp"

using namespace fps;
using fps::testing::generator;
using fps::testing::q;

TEST_CASE("reversion examples")
{
    const auto z = fps::testing::z_series(6);
    CHECK(reversion(z) == z);
    CHECK(reversion(series::from_integers({0, 1, 1, 0, 0})) == series::from_integers({0, 1, -1, 2, -5}));
    CHECK(reversion(series::from_integers({0, 2, 0})) == series(std::vector{q(0), q(1, 2), q(0)}));

    try {
        (void)reversion(series::from_integers({1, 1}));
        FAIL("expected an error");
    } catch (const error &e) {
        CHECK(e.kind() == error_kind::not_nonunit);
    }
    try {
        (void)reversion(series::from_integers({0, 0, 1}));
        FAIL("expected an error");
    } catch (const error &e) {
        CHECK(e.kind() == error_kind::zero_linear_term);
    }
}

TEST_CASE("signed Catalan numbers")
{
    // (-1)^(n-1) C_{n-1} with C_m = binom(2m, m) / (m + 1)
    const int n = 12;
    const auto r = reversion(series::from_integers({0, 1, 1}).extended(n));
    for (int i = 1; i <= n; ++i) {
        const int m = i - 1;
        rational catalan = binomial(2 * m, m) / rational(m + 1);
        if (m % 2 == 1) {
            catalan = -catalan;
        }
        CHECK(r[i] == coefficient::real(catalan, mode::exact));
    }
}

TEST_CASE("reversion round trips")
{
    generator gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = gen.uniform(1, 16);
        const auto f = gen.group_series(n);
        const auto r = reversion(f);
        const auto z = fps::testing::z_series(n);
        CHECK(compose_nonunit(r, f) == z);
        CHECK(compose_nonunit(f, r) == z);
        CHECK(reversion(r) == f);
    }
}

TEST_CASE("reversion in floating mode")
{
    generator gen(32);
    const auto f = gen.group_series(10, false);
    const auto expected = reversion(f).to_mode(mode::floating);
    const double scale = max_abs_difference(expected, series::zero(mode::floating, 10), 11);
    CHECK(max_abs_difference(reversion(f.to_mode(mode::floating)), expected, 11) <= 1e-12 * scale);
}

TEST_CASE("Pascal matrix")
{
    const pascal_matrix id(q(0), 5);
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
            CHECK(id(r, c) == q(r == c ? 1 : 0));
        }
    }
    const pascal_matrix p(q(1), 3);
    const long expected[3][3] = {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            CHECK(p(r, c) == q(expected[r][c]));
        }
    }

    generator gen(33);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a0 = gen.any();
        const int d = gen.uniform(1, 12);
        const pascal_matrix pm(a0, d);
        const comp_matrix cm(series(std::vector<coefficient>{a0, q(1)}).resized(d - 1), d - 1);
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < d; ++c) {
                CHECK(pm(r, c) == cm(c, r));
            }
        }
    }
}

TEST_CASE("Pascal solve")
{
    generator gen(34);
    const auto c = gen.any_series(7);
    CHECK(pascal_solve(q(0), c) == c);
    CHECK(pascal_solve(q(1), series::from_integers({1, 1, 1})) == series::from_integers({1, -1, 1}));

    for (int trial = 0; trial < 20; ++trial) {
        const auto a0 = gen.any();
        const auto rhs = gen.any_series(gen.uniform(0, 10));
        const auto b = pascal_solve(a0, rhs);
        const pascal_matrix p(a0, rhs.order() + 1);
        for (int r = 0; r <= rhs.order(); ++r) {
            auto acc = coefficient::zero(mode::exact);
            for (int col = 0; col <= rhs.order(); ++col) {
                acc += p(r, col) * b[col];
            }
            CHECK(acc == rhs[r]);
        }
    }
}

TEST_CASE("left inverse examples")
{
    const auto affine = left_inverse(series::from_integers({2, 3}));
    CHECK(affine.candidate == series(std::vector{q(-2, 3), q(1, 3)}));
    CHECK(affine.existence == existence_flag::proved_finite);

    const auto shift = left_inverse(series::from_integers({5, 1, 0, 0}));
    CHECK(shift.candidate == series::from_integers({-5, 1, 0, 0}));

    const int n = 16;
    const auto f = series::from_integers({1, 1, 1}).extended(n);
    const auto report = left_inverse(f);
    CHECK(report.existence == existence_flag::heuristic_no);
    CHECK(report.radius_estimate == doctest::Approx(0.25).epsilon(0.1));
    CHECK(report.candidate ==
          substitute_polynomial(reversion(series::from_integers({0, 1, 1}).extended(n)),
                                series::from_integers({-1, 1}).extended(n), n));

    CHECK(left_inverse(series::from_integers({0, 1, 1, 0})).existence == existence_flag::proved_finite);
    CHECK_THROWS_AS((void)left_inverse(series::from_integers({1, 0, 1})), error);
}

TEST_CASE("left inverse truncated identity and route equivalence")
{
    generator gen(35);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = gen.uniform(1, 10);
        const auto f = gen.any_series(n).with_coefficient(1, gen.nonzero());
        const auto g = left_inverse(f).candidate;
        CHECK(compose_general(g, f, n) == fps::testing::z_series(n));

        const auto h = reversion(f.with_coefficient(0, q(0)));
        CHECK(pascal_solve(f[0], h) == g);
    }
}

TEST_CASE("uniqueness")
{
    const auto f = series::from_integers({0, 1, 1, 0, 0, 0});
    const auto r = reversion(f);
    CHECK(uniqueness_check(f, r, r));
    const auto a0 = series::from_integers({3, 1});
    const auto inv = series::from_integers({-3, 1});
    CHECK(uniqueness_check(a0, inv, inv));
    CHECK_THROWS_AS((void)uniqueness_check(f, r, f), error);

    generator gen(36);
    for (int trial = 0; trial < 5; ++trial) {
        const auto g = gen.any_series(8).with_coefficient(1, gen.nonzero());
        const auto search = uniqueness_search(g, 40, 1000 + trial);
        CHECK(search.trials == 40);
        CHECK(search.counterexamples == 0);
    }
}
