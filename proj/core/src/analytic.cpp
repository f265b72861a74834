#include <fps/analytic.hpp>

#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

#include <fps/error.hpp>

namespace fps
{

std::string_view to_string(boundary_summable b) noexcept
{
    switch (b) {
        case boundary_summable::yes:
            return "yes";
        case boundary_summable::no:
            return "no";
        case boundary_summable::unknown:
            break;
    }
    return "unknown";
}

boundary_summable parse_boundary_summable(std::string_view text)
{
    if (text == "yes") {
        return boundary_summable::yes;
    }
    if (text == "no") {
        return boundary_summable::no;
    }
    if (text == "unknown") {
        return boundary_summable::unknown;
    }
    throw error(error_kind::invalid_argument, "boundary flag must be yes, no or unknown");
}

analytic_series::analytic_series(std::string name, generator_fn generator, double radius, boundary_summable boundary,
                                 shift_fn shift)
    : m_name(std::move(name)), m_generator(std::move(generator)), m_radius(radius), m_boundary(boundary),
      m_shift(std::move(shift))
{
    if (!m_generator) {
        throw error(error_kind::invalid_argument, "analytic series needs a generator");
    }
    if (std::isnan(m_radius) || m_radius < 0.0) {
        throw error(error_kind::invalid_argument, "radius of convergence must be a nonnegative extended real");
    }
}

coefficient analytic_series::coefficient_at(int n, mode m) const
{
    auto c = m_generator(n, m);
    if (c.get_mode() != m) {
        throw error(error_kind::mode_mismatch, "generator of '" + m_name + "' returned the wrong mode");
    }
    return c;
}

series analytic_series::truncate(int order, mode m) const
{
    std::vector<coefficient> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        out.push_back(coefficient_at(n, m));
    }
    return series(std::move(out));
}

std::optional<coefficient> analytic_series::closed_shift(const coefficient &center, int n) const
{
    if (!m_shift) {
        return std::nullopt;
    }
    return m_shift(center, n);
}

analytic_series analytic_series::with_boundary(boundary_summable b) const
{
    auto out = *this;
    out.m_boundary = b;
    return out;
}

analytic_series analytic_series::derivative() const
{
    auto gen = [g = m_generator](int n, mode m) { return g(n + 1, m) * static_cast<long>(n + 1); };
    shift_fn shift;
    if (m_shift) {
        shift = [s = m_shift](const coefficient &a, int n) -> std::optional<coefficient> {
            auto c = s(a, n + 1);
            if (!c) {
                return std::nullopt;
            }
            return *c * static_cast<long>(n + 1);
        };
    }
    return analytic_series(m_name + "'", std::move(gen), m_radius, m_boundary, std::move(shift));
}

analytic_series geometric_series()
{
    auto s = geometric_tail_series(0);
    return analytic_series("geometric", [](int, mode m) { return coefficient::one(m); }, 1.0, boundary_summable::no,
                           [s](const coefficient &a, int n) { return s.closed_shift(a, n); });
}

analytic_series geometric_tail_series(unsigned k)
{
    auto gen = [k](int n, mode m) {
        if (n < static_cast<int>(k)) {
            return coefficient::zero(m);
        }
        return coefficient::real(rational(mpz_class(1) << k), m);
    };
    // 2^k (a+u)^k / (1-a-u) expanded in u.
    auto shift = [k](const coefficient &a, int n) -> std::optional<coefficient> {
        const auto m = a.get_mode();
        const auto one_minus_a = coefficient::one(m) - a;
        if (one_minus_a.is_zero(0.0)) {
            return std::nullopt;
        }
        const auto inv = one_minus_a.inverse();
        coefficient acc = coefficient::zero(m);
        const unsigned top = std::min<unsigned>(k, static_cast<unsigned>(n));
        for (unsigned j = 0; j <= top; ++j) {
            acc += coefficient::real(binomial(k, j), m) * pow(a, k - j) *
                   pow(inv, static_cast<unsigned>(n) - j + 1);
        }
        return acc * coefficient::real(rational(mpz_class(1) << k), m);
    };
    return analytic_series("tail:" + std::to_string(k), std::move(gen), 1.0, boundary_summable::no,
                           std::move(shift));
}

analytic_series exp_series()
{
    auto gen = [](int n, mode m) {
        return coefficient::real(rational(1) / factorial(static_cast<unsigned>(n)), m);
    };
    auto shift = [](const coefficient &a, int n) -> std::optional<coefficient> {
        const auto m = a.get_mode();
        const rational inv_fact = rational(1) / factorial(static_cast<unsigned>(n));
        if (m == mode::exact) {
            if (!a.is_zero()) {
                return std::nullopt;
            }
            return coefficient::real(inv_fact, m);
        }
        return coefficient(std::exp(a.to_complex()) * inv_fact.get_d());
    };
    return analytic_series("exp", std::move(gen), infinite_radius, boundary_summable::yes, std::move(shift));
}

analytic_series polylog_series(unsigned p)
{
    auto gen = [p](int n, mode m) {
        if (n == 0) {
            return coefficient::zero(m);
        }
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(n), p);
        return coefficient::real(rational(mpz_class(1), d), m);
    };
    return analytic_series("polylog:" + std::to_string(p), std::move(gen), 1.0);
}

analytic_series factorial_series()
{
    auto gen = [](int n, mode m) { return coefficient::real(factorial(static_cast<unsigned>(n)), m); };
    return analytic_series("factorial", std::move(gen), 0.0, boundary_summable::no);
}

analytic_series lookup_outer(std::string_view spec)
{
    const auto colon = spec.find(':');
    const auto name = spec.substr(0, colon);
    std::optional<unsigned> param;
    if (colon != std::string_view::npos) {
        const auto text = spec.substr(colon + 1);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw error(error_kind::invalid_argument, "malformed parameter in '" + std::string(spec) + "'");
        }
        param = value;
    }
    const auto need = [&](std::string_view what) {
        if (!param) {
            throw error(error_kind::invalid_argument, std::string(name) + " needs a parameter " + std::string(what));
        }
        return *param;
    };
    if (name == "geometric") {
        return geometric_series();
    }
    if (name == "exp") {
        return exp_series();
    }
    if (name == "factorial") {
        return factorial_series();
    }
    if (name == "polylog") {
        return polylog_series(need("p"));
    }
    if (name == "tail") {
        return geometric_tail_series(need("k"));
    }
    throw error(error_kind::invalid_argument, "unknown outer series '" + std::string(spec) + "'");
}

radius_estimate estimate_radius(const series &f, double tol)
{
    const int n = f.order();
    std::vector<int> nonzero;
    auto collect = [&](int from) {
        nonzero.clear();
        for (int i = std::max(from, 0); i <= n; ++i) {
            if (!f[i].is_zero(tol)) {
                nonzero.push_back(i);
            }
        }
    };
    collect(n - n / 4);
    if (nonzero.size() < 2) {
        collect(n / 2);
    }
    radius_estimate out;
    if (nonzero.size() < 2) {
        return out;
    }
    double log_sum = 0.0;
    for (std::size_t i = 0; i + 1 < nonzero.size(); ++i) {
        const int lo = nonzero[i];
        const int hi = nonzero[i + 1];
        log_sum += (std::log(f[lo].abs()) - std::log(f[hi].abs())) / (hi - lo);
    }
    out.pairs_used = static_cast<int>(nonzero.size()) - 1;
    out.value = std::exp(log_sum / out.pairs_used);
    return out;
}

} // namespace fps
