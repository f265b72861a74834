#include <fps/composition.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include <fps/error.hpp>
#include <fps/partitions.hpp>

namespace fps
{

namespace
{

// f with its constant term replaced by an exact zero, at the given order.
series drop_constant(const series &f, int order)
{
    return f.truncated(order).with_coefficient(0, coefficient::zero(f.get_mode()));
}

// Horner from the top coefficient down; f is assumed nonunit at this order.
series horner(const series &g, const series &f)
{
    const int n = f.order();
    series acc = series::constant(g[g.order()], n);
    for (int k = g.order() - 1; k >= 0; --k) {
        acc = cauchy_mul(acc, f);
        acc = acc.with_coefficient(0, acc[0] + g[k]);
    }
    return acc;
}

bool on_circle(double modulus, double radius)
{
    return std::abs(modulus - radius) <= 1e-12 * std::max(1.0, radius);
}

// Partial-sum probe of g^(k)(a0) = sum_{n>=k} n!/(n-k)! b_n a0^(n-k) for a
// point on the boundary circle.
enum class probe_verdict { diverges, undecided };

probe_verdict probe_derivative_series(const analytic_series &g, std::complex<double> a0, int k,
                                      const probe_settings &probe, std::string &why)
{
    const int depth = probe.depth();
    std::vector<std::complex<double>> terms(static_cast<std::size_t>(depth) + 1, 0.0);
    for (int n = k; n <= depth; ++n) {
        double falling = 1.0;
        for (int j = 0; j < k; ++j) {
            falling *= n - j;
        }
        const auto b = g.coefficient_at(n, mode::floating).to_complex();
        terms[static_cast<std::size_t>(n)] = falling * b * std::pow(a0, n - k);
    }

    // Rule 1: partial sums grow monotonically beyond growth_factor.
    {
        std::complex<double> sum = 0.0;
        double first = 0.0;
        double previous = 0.0;
        bool monotone = true;
        for (int n = k; n <= depth; ++n) {
            sum += terms[static_cast<std::size_t>(n)];
            const double mag = std::abs(sum);
            if (first == 0.0) {
                first = mag;
            } else if (mag < previous) {
                monotone = false;
                break;
            }
            previous = mag;
        }
        if (monotone && first > 0.0 && previous > probe.growth_factor * first) {
            why = "partial sums grew monotonically by more than the growth factor";
            return probe_verdict::diverges;
        }
    }

    std::vector<double> mags;
    std::vector<double> args;
    for (const auto &t : terms) {
        mags.push_back(std::abs(t));
        if (std::abs(t) > 0.0) {
            args.push_back(std::arg(t));
        }
    }
    if (args.empty()) {
        return probe_verdict::undecided;
    }

    // Rule 2: terms that do not shrink over the last half cannot sum.
    const double tail = mags[static_cast<std::size_t>(depth)];
    const double mid = mags[static_cast<std::size_t>(std::max(k, depth / 2))];
    if (tail > 0.0 && tail >= mid) {
        why = "terms do not tend to zero";
        return probe_verdict::diverges;
    }

    // Rule 3: Cauchy condensation on |t_n|. With all terms on one ray, a
    // divergent condensed series means the series itself diverges.
    const bool aligned = std::all_of(args.begin(), args.end(), [&](double a) {
        return std::abs(std::remainder(a - args.front(), 2.0 * M_PI)) < 1e-9;
    });
    std::vector<double> condensed;
    for (long p = 1; p <= depth; p *= 2) {
        if (p >= k && mags[static_cast<std::size_t>(p)] > 0.0) {
            condensed.push_back(static_cast<double>(p) * mags[static_cast<std::size_t>(p)]);
        }
    }
    if (aligned && condensed.size() >= 4) {
        double log_ratio = 0.0;
        const std::size_t last = condensed.size() - 1;
        for (std::size_t i = last - 2; i <= last; ++i) {
            log_ratio += std::log(condensed[i] / condensed[i - 1]);
        }
        const double ratio = std::exp(log_ratio / 3.0);
        if (ratio >= probe.condensation_threshold) {
            why = "condensed terms do not decay (ratio " + std::to_string(ratio) + ")";
            return probe_verdict::diverges;
        }
    }
    return probe_verdict::undecided;
}

// g^(n)(a)/n! = sum_{m>=n} C(m,n) b_m a^(m-n), summed in floating point until
// the ratio-estimated tail is below machine precision or the term cap is hit.
coefficient numeric_shift(const analytic_series &g, std::complex<double> a, int n, const composition_options &opts)
{
    std::complex<double> sum = 0.0;
    // C(m,n) a^(m-n), updated multiplicatively.
    std::complex<double> weight = 1.0;
    double prev_mag = 0.0;
    double worst_ratio = 0.0;
    int ratios_seen = 0;
    double bound = infinite_radius;
    for (long m = n; m < n + opts.max_terms; ++m) {
        if (m > n) {
            weight *= a * (static_cast<double>(m) / static_cast<double>(m - n));
        }
        const auto term = weight * g.coefficient_at(static_cast<int>(m), mode::floating).to_complex();
        sum += term;
        const double mag = std::abs(term);
        if (mag > 0.0 && prev_mag > 0.0) {
            const double r = mag / prev_mag;
            worst_ratio = ratios_seen == 0 ? r : std::max(worst_ratio * 0.75, r);
            ++ratios_seen;
            if (ratios_seen >= 4 && worst_ratio < 1.0) {
                bound = mag * worst_ratio / (1.0 - worst_ratio);
                if (bound <= 1e-16 * std::abs(sum) || bound == 0.0) {
                    return coefficient(sum);
                }
            }
        }
        if (mag > 0.0) {
            prev_mag = mag;
        }
        if (!std::isfinite(std::abs(sum))) {
            break;
        }
    }
    if (bound <= opts.tolerance * std::max(1.0, std::abs(sum))) {
        return coefficient(sum);
    }
    throw error(error_kind::tolerance_not_met, "Taylor-shift coefficient " + std::to_string(n) + " of '" + g.name() +
                                                   "' did not settle within " + std::to_string(opts.max_terms) +
                                                   " terms");
}

} // namespace

bool is_nonunit(const series &f, double tol)
{
    return f[0].is_zero(tol);
}

series compose_nonunit(const series &g, const series &f, double tol)
{
    if (g.get_mode() != f.get_mode()) {
        throw error(error_kind::mode_mismatch, "series modes differ");
    }
    if (!is_nonunit(f, tol)) {
        throw error(error_kind::nonzero_constant_term, "compose_nonunit needs a_0(f) = 0; use compose_general");
    }
    const int n = std::min(g.order(), f.order());
    return horner(g.truncated(n), drop_constant(f, n));
}

series substitute_polynomial(const series &g, const series &f, int order)
{
    if (g.get_mode() != f.get_mode()) {
        throw error(error_kind::mode_mismatch, "series modes differ");
    }
    if (order < 0 || order > f.order()) {
        throw error(error_kind::invalid_argument, "substitution order exceeds the inner series");
    }
    const auto inner = f.truncated(order);
    series acc = series::constant(g[g.order()], order);
    for (int k = g.order() - 1; k >= 0; --k) {
        acc = cauchy_mul(acc, inner) + series::constant(g[k], order);
    }
    return acc;
}

series taylor_shift(const series &g, const coefficient &a)
{
    if (g.get_mode() != a.get_mode()) {
        throw error(error_kind::mode_mismatch, "shift and series modes differ");
    }
    const int n = g.order();
    const auto m = g.get_mode();
    std::vector<coefficient> powers{coefficient::one(m)};
    for (int i = 1; i <= n; ++i) {
        powers.push_back(powers.back() * a);
    }
    std::vector<coefficient> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        coefficient acc = coefficient::zero(m);
        for (int j = k; j <= n; ++j) {
            if (g[j].is_zero(0.0)) {
                continue;
            }
            acc += coefficient::real(binomial(static_cast<unsigned>(j), static_cast<unsigned>(k)), m) *
                   powers[static_cast<std::size_t>(j - k)] * g[j];
        }
        out.push_back(std::move(acc));
    }
    return series(std::move(out));
}

series compose_general(const series &g, const series &f)
{
    return compose_general(g, f, std::min(g.order(), f.order()));
}

series compose_general(const series &g, const series &f, int order)
{
    if (g.get_mode() != f.get_mode()) {
        throw error(error_kind::mode_mismatch, "series modes differ");
    }
    if (order < 0) {
        throw error(error_kind::invalid_argument, "negative order");
    }
    const int n = std::min(order, f.order());
    if (is_nonunit(f)) {
        return horner(g.resized(n), drop_constant(f, n));
    }
    // g_D has the same degree as g; coefficients above n meet powers of a
    // nonunit series of order > n and drop out.
    const auto g_d = taylor_shift(g, f[0]);
    return horner(g_d.resized(n), drop_constant(f, n));
}

series taylor_shift_coefficients(const analytic_series &g, const coefficient &a, int order,
                                 const composition_options &opts)
{
    const auto m = a.get_mode();
    if (a.is_zero(opts.tolerance)) {
        return g.truncate(order, m);
    }
    std::vector<coefficient> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        if (auto c = g.closed_shift(a, n)) {
            out.push_back(std::move(*c));
        } else if (m == mode::floating) {
            out.push_back(numeric_shift(g, a.to_complex(), n, opts));
        } else {
            throw error(error_kind::exact_evaluation_unavailable,
                        "'" + g.name() + "' has no exact Taylor shift at " + a.to_string() + "; use float mode");
        }
    }
    return series(std::move(out));
}

series compose_general(const analytic_series &g, const series &f, int order, const composition_options &opts)
{
    if (order < 0) {
        throw error(error_kind::invalid_argument, "negative order");
    }
    const int n = std::min(order, f.order());
    const auto a0 = f[0];
    const auto check = gct_check(g, a0, opts.probe);
    if (check.status == gct_status::fails) {
        throw error(error_kind::composition_does_not_exist,
                    "'" + g.name() + "' at a0 = " + a0.to_string() + ": " + check.detail +
                        (check.fails_at_k ? " (fails_at_k=" + std::to_string(*check.fails_at_k) + ")" : ""));
    }
    if (is_nonunit(f, opts.tolerance)) {
        return horner(g.truncate(n, f.get_mode()), drop_constant(f, n));
    }
    const auto g_d = taylor_shift_coefficients(g, a0, n, opts);
    return horner(g_d, drop_constant(f, n));
}

series compose_general(const outer_series &g, const series &f, int order, const composition_options &opts)
{
    if (const auto *s = std::get_if<series>(&g)) {
        return compose_general(*s, f, order);
    }
    return compose_general(std::get<analytic_series>(g), f, order, opts);
}

std::string_view to_string(gct_status s) noexcept
{
    switch (s) {
        case gct_status::exists:
            return "exists";
        case gct_status::fails:
            return "fails";
        case gct_status::inconclusive:
            break;
    }
    return "inconclusive";
}

gct_result gct_check(const analytic_series &g, const coefficient &a0, const probe_settings &probe)
{
    gct_result out;
    const double r = g.radius();
    const double mod = a0.abs();
    if (a0.is_zero(0.0)) {
        out.status = gct_status::exists;
        out.detail = "nonunit inner series";
        return out;
    }
    if (std::isinf(r)) {
        out.status = gct_status::exists;
        out.detail = "entire outer series";
        return out;
    }
    if (r == 0.0) {
        out.status = gct_status::fails;
        out.fails_at_k = 0;
        out.detail = "radius 0 admits only nonunit inner series";
        return out;
    }
    if (!on_circle(mod, r)) {
        if (mod < r) {
            out.status = gct_status::exists;
            out.detail = "|a0| < r(g)";
        } else {
            out.status = gct_status::fails;
            out.fails_at_k = 0;
            out.detail = "|a0| > r(g)";
        }
        return out;
    }
    if (g.boundary() == boundary_summable::yes) {
        out.status = gct_status::exists;
        out.detail = "|a0| = r(g), boundary summable by metadata";
        return out;
    }
    const auto z0 = a0.to_complex();
    for (int k = 0; k <= probe.max_k; ++k) {
        std::string why;
        if (probe_derivative_series(g, z0, k, probe, why) == probe_verdict::diverges) {
            out.status = gct_status::fails;
            out.fails_at_k = k;
            out.detail = "|a0| = r(g), derivative series " + std::to_string(k) + ": " + why;
            return out;
        }
    }
    if (g.boundary() == boundary_summable::no) {
        out.status = gct_status::fails;
        out.detail = "|a0| = r(g), not boundary summable by metadata";
        return out;
    }
    out.status = gct_status::inconclusive;
    out.detail = "|a0| = r(g), no divergence found for k <= " + std::to_string(probe.max_k) + " at depth " +
                 std::to_string(probe.depth());
    return out;
}

std::string_view to_string(domain_kind k) noexcept
{
    switch (k) {
        case domain_kind::origin_only:
            return "origin-only";
        case domain_kind::open_disk:
            return "open-disk";
        case domain_kind::closed_disk:
            return "closed-disk";
        case domain_kind::entire:
            break;
    }
    return "entire";
}

domain_class classify_domain(const analytic_series &g)
{
    const double r = g.radius();
    if (r == 0.0) {
        return {domain_kind::origin_only, r};
    }
    if (std::isinf(r)) {
        return {domain_kind::entire, r};
    }
    switch (g.boundary()) {
        case boundary_summable::yes:
            return {domain_kind::closed_disk, r};
        case boundary_summable::no:
            return {domain_kind::open_disk, r};
        case boundary_summable::unknown:
            break;
    }
    throw error(error_kind::insufficient_metadata,
                "'" + g.name() + "' has finite positive radius but no boundary_summable flag");
}

coefficient multinomial_oracle(const series &g, const series &f, int n)
{
    if (g.get_mode() != f.get_mode()) {
        throw error(error_kind::mode_mismatch, "series modes differ");
    }
    if (!is_nonunit(f)) {
        throw error(error_kind::nonzero_constant_term, "multinomial oracle needs a_0(f) = 0");
    }
    if (n < 0 || n > std::min(g.order(), f.order())) {
        throw error(error_kind::invalid_argument, "index exceeds the aligned order");
    }
    const auto m = f.get_mode();
    const auto un = static_cast<unsigned>(n);
    coefficient total = coefficient::zero(m);
    for (unsigned s = 0; s <= un; ++s) {
        if (g[static_cast<int>(s)].is_zero(0.0)) {
            continue;
        }
        for (const auto &r : partition_set(un, s)) {
            rational weight = factorial(s);
            coefficient product = coefficient::one(m);
            for (unsigned i = 0; i <= un; ++i) {
                weight /= factorial(r[i]);
                product *= pow(f[static_cast<int>(i)], r[i]);
            }
            total += g[static_cast<int>(s)] * coefficient::real(weight, m) * product;
        }
    }
    return total;
}

outer_series derivative(const outer_series &g, unsigned j)
{
    if (const auto *s = std::get_if<series>(&g)) {
        if (static_cast<long>(j) > s->order()) {
            return series::zero(s->get_mode(), 0);
        }
        return formal_derivative(*s, j);
    }
    auto d = std::get<analytic_series>(g);
    for (unsigned i = 0; i < j; ++i) {
        d = d.derivative();
    }
    return d;
}

} // namespace fps
