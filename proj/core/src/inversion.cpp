#include <fps/inversion.hpp>

#include <cmath>
#include <random>
#include <utility>

#include <fps/composition.hpp>
#include <fps/error.hpp>

namespace fps
{

series reversion(const series &f, double tol)
{
    if (!f[0].is_zero(tol)) {
        throw error(error_kind::not_nonunit, "reversion needs a_0 = 0");
    }
    if (f.order() < 1 || f[1].is_zero(tol)) {
        throw error(error_kind::zero_linear_term, "reversion needs a_1 != 0");
    }
    const int n = f.order();
    const auto m = f.get_mode();
    const auto inner = f.with_coefficient(0, coefficient::zero(m));

    // powers[k] = f^k, k = 1..n-1
    std::vector<series> powers;
    powers.reserve(static_cast<std::size_t>(n));
    powers.push_back(series::one(m, n));
    for (int k = 1; k < n; ++k) {
        powers.push_back(cauchy_mul(powers.back(), inner));
    }

    std::vector<coefficient> b(static_cast<std::size_t>(n) + 1, coefficient::zero(m));
    const auto a1_inv = inner[1].inverse();
    b[1] = a1_inv;
    auto a1_inv_pow = a1_inv;
    for (int i = 2; i <= n; ++i) {
        a1_inv_pow *= a1_inv;
        coefficient acc = coefficient::zero(m);
        for (int k = 1; k < i; ++k) {
            acc += b[static_cast<std::size_t>(k)] * powers[static_cast<std::size_t>(k)][i];
        }
        b[static_cast<std::size_t>(i)] = -(acc * a1_inv_pow);
    }
    return series(std::move(b));
}

pascal_matrix::pascal_matrix(const coefficient &shift, int dim) : m_shift(shift), m_dim(dim)
{
    if (dim < 1) {
        throw error(error_kind::invalid_argument, "Pascal matrix dimension must be positive");
    }
    const auto m = shift.get_mode();
    m_entries.assign(static_cast<std::size_t>(dim * dim), coefficient::zero(m));
    std::vector<coefficient> powers{coefficient::one(m)};
    for (int i = 1; i < dim; ++i) {
        powers.push_back(powers.back() * shift);
    }
    for (int k = 0; k < dim; ++k) {
        for (int n = k; n < dim; ++n) {
            m_entries[static_cast<std::size_t>(k * dim + n)] =
                coefficient::real(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)), m) *
                powers[static_cast<std::size_t>(n - k)];
        }
    }
}

series pascal_solve(const coefficient &shift, const series &rhs)
{
    if (shift.get_mode() != rhs.get_mode()) {
        throw error(error_kind::mode_mismatch, "shift and right-hand side modes differ");
    }
    const int n = rhs.order();
    const pascal_matrix p(shift, n + 1);
    std::vector<coefficient> b(static_cast<std::size_t>(n) + 1, coefficient::zero(rhs.get_mode()));
    for (int row = n; row >= 0; --row) {
        coefficient acc = rhs[row];
        for (int col = row + 1; col <= n; ++col) {
            acc -= p(row, col) * b[static_cast<std::size_t>(col)];
        }
        // unit diagonal
        b[static_cast<std::size_t>(row)] = std::move(acc);
    }
    return series(std::move(b));
}

std::string_view to_string(existence_flag e) noexcept
{
    switch (e) {
        case existence_flag::proved_finite:
            return "proved-finite";
        case existence_flag::heuristic_yes:
            return "heuristic-yes";
        case existence_flag::heuristic_no:
            return "heuristic-no";
        case existence_flag::unknown:
            break;
    }
    return "unknown";
}

left_inverse_report left_inverse(const series &f, double tol)
{
    if (f.order() < 1 || f[1].is_zero(tol)) {
        throw error(error_kind::zero_linear_term, "no left composition inverse exists when a_1 = 0");
    }
    const int n = f.order();
    const auto m = f.get_mode();
    const auto a0 = f[0];
    const auto h = reversion(f.with_coefficient(0, coefficient::zero(m)), tol);

    // candidate(z) = h(z - a0)
    std::vector<coefficient> shift_coeffs{-a0, coefficient::one(m)};
    const series z_minus_a0 = series(std::move(shift_coeffs)).extended(n);
    left_inverse_report report{substitute_polynomial(h, z_minus_a0, n), existence_flag::unknown, infinite_radius, {}};

    const auto estimate = estimate_radius(h, tol);
    report.radius_estimate = estimate.value;
    const double mod = a0.abs();

    bool affine = true;
    for (int i = 2; i <= n; ++i) {
        affine = affine && f[i].is_zero(tol);
    }

    if (a0.is_zero(tol)) {
        report.existence = existence_flag::proved_finite;
        report.detail = "nonunit: the candidate is the reversion of f";
    } else if (affine) {
        report.existence = existence_flag::proved_finite;
        report.detail = "affine f: (f - a0)^[-1] is linear and the Pascal system is finite";
    } else if (estimate.pairs_used == 0) {
        report.existence = existence_flag::unknown;
        report.detail = "too few nonzero coefficients of (f - a0)^[-1] for a ratio estimate";
    } else if (estimate.value > 2.0 * mod) {
        report.existence = existence_flag::heuristic_yes;
        report.detail = "estimated r(h) exceeds 2|a0|";
    } else if (estimate.value < 0.5 * mod) {
        report.existence = existence_flag::heuristic_no;
        report.detail = "estimated r(h) is below |a0|/2";
    } else {
        report.existence = existence_flag::unknown;
        report.detail = "estimated r(h) is within a factor 2 of |a0|";
    }
    return report;
}

namespace
{

bool composes_to_identity(const series &g, const series &f, double tol)
{
    const int n = std::min(g.order(), f.order());
    return equal(compose_general(g, f, n), series::identity(f.get_mode(), n), tol);
}

} // namespace

bool uniqueness_check(const series &f, const series &g1, const series &g2, double tol)
{
    if (!composes_to_identity(g1, f, tol) || !composes_to_identity(g2, f, tol)) {
        throw error(error_kind::precondition_failed, "both candidates must compose with f to z");
    }
    if (g1.order() != g2.order()) {
        const int n = std::min(g1.order(), g2.order());
        return equal(g1.truncated(n), g2.truncated(n), tol);
    }
    return equal(g1, g2, tol);
}

uniqueness_search_result uniqueness_search(const series &f, int trials, std::uint64_t seed)
{
    const auto base = left_inverse(f).candidate;
    const auto m = f.get_mode();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> index(0, base.order());
    std::uniform_int_distribution<long> numer(-9, 9);
    std::uniform_int_distribution<long> denom(1, 9);

    uniqueness_search_result out;
    for (int t = 0; t < trials; ++t) {
        long p = numer(rng);
        if (p == 0) {
            p = 1;
        }
        const auto delta = coefficient::real(rational(mpz_class(p), mpz_class(denom(rng))), m);
        const int i = index(rng);
        const auto other = base.with_coefficient(i, base[i] + delta);
        ++out.trials;
        if (composes_to_identity(other, f, default_tolerance)) {
            ++out.counterexamples;
        }
    }
    return out;
}

} // namespace fps
