#include <fps/calculus.hpp>

#include <algorithm>
#include <cmath>
#include <utility>

#include <fps/error.hpp>

namespace fps
{

namespace
{

int aligned(const series &a, const series &b)
{
    if (a.get_mode() != b.get_mode()) {
        throw error(error_kind::mode_mismatch, "series modes differ");
    }
    return std::min(a.order(), b.order());
}

// Exact modulus when it is rational.
std::optional<rational> rational_modulus(const coefficient &c)
{
    const auto &g = c.exact();
    if (sgn(g.im) == 0) {
        return abs(g.re);
    }
    if (sgn(g.re) == 0) {
        return abs(g.im);
    }
    return std::nullopt;
}

bool composable(const outer_series &g, const coefficient &a0, const composition_options &opts)
{
    if (const auto *a = std::get_if<analytic_series>(&g)) {
        return gct_check(*a, a0, opts.probe).status != gct_status::fails;
    }
    return true;
}

double positive_real(const coefficient &t)
{
    if (!t.is_real(0.0) || t.to_complex().real() <= 0.0) {
        throw error(error_kind::invalid_argument, "step sizes must be positive reals");
    }
    return t.to_complex().real();
}

} // namespace

metric_value metric(const series &f, const series &g)
{
    const int n = aligned(f, g);
    metric_value out;
    out.tail_bound = std::ldexp(1.0, -n);
    const bool exact = f.get_mode() == mode::exact;
    rational exact_sum(0);
    bool exact_ok = exact;
    for (int i = 0; i <= n; ++i) {
        const auto diff = f[i] - g[i];
        const double d = diff.abs();
        out.value += std::ldexp(d / (d + 1.0), -i);
        if (exact_ok) {
            if (const auto q = rational_modulus(diff)) {
                rational term = *q / (*q + 1);
                term /= rational(mpz_class(1) << static_cast<unsigned>(i));
                exact_sum += term;
            } else {
                exact_ok = false;
            }
        }
    }
    if (exact_ok) {
        out.exact = exact_sum;
        out.value = exact_sum.get_d();
    }
    return out;
}

series superposition_derivative(const outer_series &g, const series &w, const series &k,
                                const composition_options &opts)
{
    const int n = aligned(w, k);
    const auto outer = compose_general(derivative(g, 1), w, n, opts);
    return cauchy_mul(outer, k.truncated(n));
}

std::vector<coefficient> default_t_sweep(mode m)
{
    std::vector<coefficient> out;
    if (m == mode::exact) {
        for (long d : {10L, 100L, 1000L}) {
            out.push_back(coefficient::real(rational(mpz_class(1), mpz_class(d)), m));
        }
    } else {
        for (double t : {1e-2, 1e-3, 1e-4, 1e-5}) {
            out.emplace_back(std::complex<double>(t, 0.0));
        }
    }
    return out;
}

derivative_probe finite_difference_probe(const outer_series &g, const series &w, const series &k,
                                         const std::vector<coefficient> &t_values, int coefficients,
                                         const composition_options &opts)
{
    const int n = aligned(w, k);
    const int count = coefficients < 0 ? n + 1 : std::min(coefficients, n + 1);
    for (std::size_t i = 0; i < t_values.size(); ++i) {
        const double t = positive_real(t_values[i]);
        if (i > 0 && !(t < positive_real(t_values[i - 1]))) {
            throw error(error_kind::invalid_argument, "step sizes must be strictly decreasing");
        }
    }

    derivative_probe probe{w.truncated(n), k.truncated(n), {}, {}, {}, {}, std::nullopt};
    for (const auto &t : t_values) {
        if (composable(g, w[0] + t * k[0], opts)) {
            probe.t_values.push_back(t);
        } else {
            probe.skipped.push_back(t);
        }
    }
    if (probe.t_values.empty()) {
        throw error(error_kind::domain_exit, "every w + t k leaves the composability domain");
    }

    const auto base = compose_general(g, probe.w, n, opts);
    const auto deriv = superposition_derivative(g, probe.w, probe.k, opts);
    std::vector<double> ts;
    for (const auto &t : probe.t_values) {
        const auto moved = compose_general(g, probe.w + scale(probe.k, t), n, opts);
        const auto rem = scale(moved - base, t.inverse()) - deriv;
        double norm = 0.0;
        for (int i = 0; i < count; ++i) {
            norm = std::max(norm, rem[i].abs());
        }
        probe.remainder_series.push_back(rem);
        probe.remainders.push_back(norm);
        ts.push_back(t.to_complex().real());
    }
    probe.slope = loglog_slope(ts, probe.remainders);
    return probe;
}

series taylor_remainder(const outer_series &g, const series &f, const series &k, unsigned n, const coefficient &t,
                        const composition_options &opts)
{
    const int order = aligned(f, k);
    const auto ff = f.truncated(order);
    const auto kk = k.truncated(order);
    series out = compose_general(g, ff + scale(kk, t), order, opts);
    const auto m = f.get_mode();
    auto k_pow = series::one(m, order);
    auto weight = coefficient::one(m);
    for (unsigned j = 0; j <= n; ++j) {
        if (j > 0) {
            k_pow = cauchy_mul(k_pow, kk);
            weight = weight * t / coefficient::integer(static_cast<long>(j), m);
        }
        const auto term = cauchy_mul(compose_general(derivative(g, j), ff, order, opts), k_pow);
        out = out - scale(term, weight);
    }
    return out;
}

std::optional<double> loglog_slope(std::span<const double> t, std::span<const double> values)
{
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < std::min(t.size(), values.size()); ++i) {
        if (t[i] > 0.0 && values[i] > 0.0) {
            pts.emplace_back(std::log(t[i]), std::log(values[i]));
        }
    }
    if (pts.size() < 2) {
        return std::nullopt;
    }
    double mx = 0.0;
    double my = 0.0;
    for (const auto &[x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto &[x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if (sxx == 0.0) {
        return std::nullopt;
    }
    return sxy / sxx;
}

} // namespace fps
