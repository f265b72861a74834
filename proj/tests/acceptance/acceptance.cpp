// Runs the twelve acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fps/fps.hpp>

#include "random_series.hpp"

using namespace fps;
using fps::testing::generator;
using fps::testing::q;

namespace
{

struct outcome {
    bool passed;
    std::string detail;
};

outcome reversion_round_trip()
{
    generator gen(1001);
    const auto start = std::chrono::steady_clock::now();
    const auto z = fps::testing::z_series(16);
    int bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = gen.group_series(16);
        if (!(compose_nonunit(reversion(f), f) == z)) {
            ++bad;
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {bad == 0 && seconds < 10.0,
            std::to_string(200 - bad) + "/200 exact, " + std::to_string(seconds) + " s"};
}

outcome catalan_witness()
{
    const auto r = reversion(series::from_integers({0, 1, 1}).extended(8));
    const auto expected = series::from_integers({0, 1, -1, 2, -5, 14, -42, 132, -429});
    return {r == expected, r.to_string()};
}

outcome oracle_triangle()
{
    generator gen(1003);
    int bad = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = gen.any_series(8);
        const auto f = gen.nonunit_series(8);
        const auto horner = compose_nonunit(g, f);
        const auto via_matrix = matrix_compose(g, f);
        bool same = horner == via_matrix;
        for (int n = 0; n <= 8; ++n) {
            same = same && multinomial_oracle(g, f, n) == horner[n];
        }
        bad += same ? 0 : 1;
    }
    return {bad == 0, std::to_string(50 - bad) + "/50 pairs agree"};
}

outcome pascal_identity()
{
    generator gen(1004);
    int bad = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto a0 = gen.any();
        const pascal_matrix p(a0, 12);
        const comp_matrix c(series(std::vector<coefficient>{a0, q(1)}).extended(11), 11);
        bool same = true;
        for (int r = 0; r < 12; ++r) {
            for (int col = 0; col < 12; ++col) {
                same = same && p(r, col) == c(col, r);
            }
        }
        bad += same ? 0 : 1;
    }
    return {bad == 0, std::to_string(20 - bad) + "/20 shifts"};
}

outcome left_inverse_routes()
{
    generator gen(1005);
    int identity_bad = 0;
    int route_bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = gen.uniform(1, 10);
        const auto f = gen.any_series(n).with_coefficient(1, gen.nonzero());
        const auto candidate = left_inverse(f).candidate;
        if (!(compose_general(candidate, f, n) == fps::testing::z_series(n))) {
            ++identity_bad;
        }
        const auto f20 = f.extended(20);
        const auto wide = left_inverse(f20).candidate;
        const auto solved = pascal_solve(f[0], reversion(f20.with_coefficient(0, q(0))));
        if (!(wide.truncated(5) == solved.truncated(5))) {
            ++route_bad;
        }
    }
    return {identity_bad == 0 && route_bad == 0, std::to_string(100 - identity_bad) + "/100 compose to z, " +
                                                     std::to_string(100 - route_bad) + "/100 route matches"};
}

outcome general_closed_form()
{
    const int n = 12;
    const auto f = series(std::vector{q(1, 2), q(1)}).extended(n);
    const auto exact = compose_general(geometric_series(), f, n);
    const auto floating = compose_general(geometric_series(), f.to_mode(mode::floating), n);
    bool exact_ok = true;
    double worst = 0.0;
    for (int i = 0; i <= n; ++i) {
        exact_ok = exact_ok && exact[i] == q(2L << i);
        const double expected = std::ldexp(1.0, i + 1);
        worst = std::max(worst, std::abs(floating[i].to_complex() - expected) / expected);
    }
    return {exact_ok && worst <= 1e-10, "exact " + std::string(exact_ok ? "matches" : "differs") +
                                            ", float max relative error " + std::to_string(worst)};
}

outcome discontinuity()
{
    generator gen(1007);
    const int n = 24;
    const auto zero = series::zero(mode::exact, n);
    bool ok = true;
    double previous = 1.0;
    for (unsigned k = 1; k <= 10; ++k) {
        const auto fk = geometric_tail_series(k);
        const auto g = gen.any_series(n).with_coefficient(0, q(1, 2));
        const auto c = compose_general(fk, g, n);
        const double d = metric(fk.truncate(n, mode::exact), zero).value;
        ok = ok && c[0] == q(2) && d < std::ldexp(1.0, -static_cast<int>(k) + 2) && d < previous;
        previous = d;
    }
    return {ok, "f_k(1/2) = 2 for k = 1..10, d(f_10, 0) = " + std::to_string(previous)};
}

outcome derivative_check()
{
    const int n = 10;
    const auto w = series(std::vector{q(1, 2), q(1)}).extended(n);
    const auto k = series::from_integers({1, 1}).extended(n);
    const auto probe = finite_difference_probe(geometric_series(), w.to_mode(mode::floating), k.to_mode(mode::floating),
                                               default_t_sweep(mode::floating), 8);
    const bool slope_ok = probe.slope && *probe.slope >= 0.9 && *probe.slope <= 1.1;

    const auto ts = default_t_sweep(mode::exact);
    const auto square = finite_difference_probe(outer_series(series::from_integers({0, 0, 1})), w, k, ts);
    bool exact_ok = square.remainder_series.size() == ts.size();
    for (std::size_t i = 0; exact_ok && i < ts.size(); ++i) {
        exact_ok = square.remainder_series[i] == scale(cauchy_mul(k, k), ts[i]);
    }
    return {slope_ok && exact_ok, "slope " + (probe.slope ? std::to_string(*probe.slope) : std::string("none")) +
                                      ", z^2 remainder " + (exact_ok ? "= t k^2" : "differs")};
}

outcome taylor_formula()
{
    generator gen(1009);
    bool poly_ok = true;
    for (unsigned degree = 1; degree <= 6; ++degree) {
        const auto g = gen.any_series(static_cast<int>(degree)).with_coefficient(static_cast<int>(degree), gen.nonzero());
        const auto f = gen.any_series(8);
        const auto k = gen.any_series(8);
        poly_ok = poly_ok && taylor_remainder(g, f, k, degree, q(1, 10)).is_zero();
    }

    const auto w = series(std::vector{q(1, 2), q(1)}).extended(8).to_mode(mode::floating);
    const auto one = series::one(mode::floating, 8);
    const auto zero = series::zero(mode::floating, 8);
    double worst = INFINITY;
    for (unsigned n = 1; n <= 2; ++n) {
        double previous = -1.0;
        for (double t : {1e-2, 1e-3, 1e-4}) {
            const auto r = taylor_remainder(geometric_series(), w, one, n, coefficient(std::complex<double>(t, 0)));
            const double size = max_abs_difference(r, zero, 9) / std::pow(t, n);
            if (previous > 0) {
                worst = std::min(worst, previous / size);
            }
            previous = size;
        }
    }
    return {poly_ok && worst >= 5.0, std::string(poly_ok ? "polynomial remainders vanish" : "polynomial remainder") +
                                         ", smallest shrink factor per decade " + std::to_string(worst)};
}

outcome lie_suite()
{
    generator gen(1010);
    const auto br = [](const series &f, const series &g) {
        return lie_bracket(algebra_element(f), algebra_element(g)).get_series();
    };
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = gen.nonunit_series(12);
        const auto g = gen.nonunit_series(12);
        const auto h = gen.nonunit_series(12);
        const auto a = gen.any();
        const auto b = gen.any();
        const auto z = fps::testing::z_series(12);
        bool ok = br(f, g) == negate(br(g, f));
        ok = ok && br(scale(f, a) + scale(h, b), g) == scale(br(f, g), a) + scale(br(h, g), b);
        ok = ok && br(g, scale(f, a) + scale(h, b)) == scale(br(g, f), a) + scale(br(g, h), b);
        ok = ok && (br(br(f, g), h) + br(br(g, h), f) + br(br(h, f), g)).is_zero();
        ok = ok && invariant_field_derivative(z, algebra_element(f), algebra_element(g)) -
                           invariant_field_derivative(z, algebra_element(g), algebra_element(f)) ==
                       br(f, g);
        bad += ok ? 0 : 1;
    }
    const bool example = br(series::from_integers({0, 0, 1, 0, 0}), series::from_integers({0, 0, 0, 1, 0})) ==
                         series::from_integers({0, 0, 0, 0, 1});
    return {bad == 0 && example,
            std::to_string(100 - bad) + "/100 triples, [z^2, z^3] " + (example ? "= z^4" : "differs")};
}

outcome group_suite()
{
    generator gen(1011);
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const group_element g(gen.group_series(12));
        const group_element f1(gen.group_series(12));
        const group_element f2(gen.group_series(12));
        bool ok = group_mul(g, f1).slope() == g.slope() * f1.slope();
        ok = ok && similarity(g, f1).slope() == f1.slope();
        ok = ok && similarity(g, group_mul(f1, f2)).get_series() ==
                       group_mul(similarity(g, f1), similarity(g, f2)).get_series();
        bad += ok ? 0 : 1;
    }
    return {bad == 0, std::to_string(100 - bad) + "/100 pairs"};
}

outcome boundary_heuristic()
{
    const auto cube = gct_check(polylog_series(3), q(1));
    const auto fourth = gct_check(polylog_series(4).with_boundary(boundary_summable::yes), q(1));
    const bool ok = cube.status == gct_status::fails && cube.fails_at_k == 2 && fourth.status == gct_status::exists;
    return {ok, "n^-3: " + std::string(to_string(cube.status)) +
                    (cube.fails_at_k ? " at k=" + std::to_string(*cube.fails_at_k) : std::string()) +
                    ", n^-4 with boundary flag: " + std::string(to_string(fourth.status))};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, std::function<outcome()>>> criteria{
        {"reversion round trip", reversion_round_trip},
        {"Catalan witness", catalan_witness},
        {"oracle triangle", oracle_triangle},
        {"Pascal identity", pascal_identity},
        {"left inverse", left_inverse_routes},
        {"general composition closed form", general_closed_form},
        {"discontinuity witness", discontinuity},
        {"derivative check", derivative_check},
        {"Taylor formula", taylor_formula},
        {"Lie algebra", lie_suite},
        {"group and similarity", group_suite},
        {"boundary heuristic", boundary_heuristic},
    };

    int failures = 0;
    int index = 0;
    for (const auto &[label, check] : criteria) {
        ++index;
        outcome result{false, {}};
        try {
            result = check();
        } catch (const std::exception &e) {
            result = {false, std::string("threw: ") + e.what()};
        }
        failures += result.passed ? 0 : 1;
        std::printf("%s %2d %s: %s\n", result.passed ? "PASS" : "FAIL", index, label, result.detail.c_str());
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
