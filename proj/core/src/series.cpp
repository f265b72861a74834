#include <fps/series.hpp>

#include <algorithm>
#include <cmath>
#include <utility>

#include <fps/error.hpp>

namespace fps
{

namespace
{

void check_modes(const series &f, const series &g)
{
    if (f.get_mode() != g.get_mode()) {
        throw error(error_kind::mode_mismatch, "series modes differ");
    }
}

int aligned_order(const series &f, const series &g)
{
    check_modes(f, g);
    return std::min(f.order(), g.order());
}

} // namespace

series::series(std::vector<coefficient> coeffs) : m_coeffs(std::move(coeffs))
{
    if (m_coeffs.empty()) {
        throw error(error_kind::invalid_argument, "a series needs at least one coefficient");
    }
    const auto m = m_coeffs.front().get_mode();
    for (const auto &c : m_coeffs) {
        if (c.get_mode() != m) {
            throw error(error_kind::mode_mismatch, "coefficients of a series must share one mode");
        }
    }
}

series series::from_integers(std::initializer_list<long> coeffs, mode m)
{
    std::vector<coefficient> out;
    out.reserve(coeffs.size());
    for (auto c : coeffs) {
        out.push_back(coefficient::integer(c, m));
    }
    return series(std::move(out));
}

series series::zero(mode m, int order)
{
    return constant(coefficient::zero(m), order);
}

series series::one(mode m, int order)
{
    return constant(coefficient::one(m), order);
}

series series::constant(const coefficient &c, int order)
{
    return monomial(c, 0, order);
}

series series::identity(mode m, int order)
{
    return monomial(coefficient::one(m), 1, order);
}

series series::monomial(const coefficient &c, int power, int order)
{
    if (order < 0 || power < 0) {
        throw error(error_kind::invalid_argument, "negative order or power");
    }
    std::vector<coefficient> out(static_cast<std::size_t>(order) + 1, coefficient::zero(c.get_mode()));
    if (power <= order) {
        out[static_cast<std::size_t>(power)] = c;
    }
    return series(std::move(out));
}

series series::truncated(int new_order) const
{
    if (new_order < 0 || new_order > order()) {
        throw error(error_kind::invalid_argument, "cannot truncate to order " + std::to_string(new_order));
    }
    return series(std::vector<coefficient>(m_coeffs.begin(), m_coeffs.begin() + new_order + 1));
}

series series::extended(int new_order) const
{
    if (new_order < order()) {
        throw error(error_kind::invalid_argument, "cannot extend to a smaller order");
    }
    auto out = m_coeffs;
    out.resize(static_cast<std::size_t>(new_order) + 1, coefficient::zero(get_mode()));
    return series(std::move(out));
}

series series::resized(int new_order) const
{
    return new_order <= order() ? truncated(new_order) : extended(new_order);
}

series series::to_mode(mode m) const
{
    std::vector<coefficient> out;
    out.reserve(m_coeffs.size());
    for (const auto &c : m_coeffs) {
        out.push_back(c.to_mode(m));
    }
    return series(std::move(out));
}

series series::with_coefficient(int n, const coefficient &c) const
{
    if (n < 0 || n > order()) {
        throw error(error_kind::invalid_argument, "coefficient index out of range");
    }
    auto out = m_coeffs;
    out[static_cast<std::size_t>(n)] = c;
    return series(std::move(out));
}

bool series::is_zero(double tol) const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [tol](const coefficient &c) { return c.is_zero(tol); });
}

std::string series::to_string() const
{
    std::string out;
    for (int n = 0; n <= order(); ++n) {
        const auto &c = m_coeffs[static_cast<std::size_t>(n)];
        if (c.is_zero(0.0)) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + c.to_string() + ")";
        if (n == 1) {
            out += "z";
        } else if (n > 1) {
            out += "z^" + std::to_string(n);
        }
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " + O(z^" + std::to_string(order() + 1) + ")";
}

series add(const series &f, const series &g)
{
    const int n = aligned_order(f, g);
    std::vector<coefficient> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        out.push_back(f[i] + g[i]);
    }
    return series(std::move(out));
}

series sub(const series &f, const series &g)
{
    const int n = aligned_order(f, g);
    std::vector<coefficient> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        out.push_back(f[i] - g[i]);
    }
    return series(std::move(out));
}

series negate(const series &f)
{
    std::vector<coefficient> out;
    out.reserve(f.coeffs().size());
    for (const auto &c : f.coeffs()) {
        out.push_back(-c);
    }
    return series(std::move(out));
}

series scale(const series &f, const coefficient &c)
{
    if (f.get_mode() != c.get_mode()) {
        throw error(error_kind::mode_mismatch, "scalar and series modes differ");
    }
    std::vector<coefficient> out;
    out.reserve(f.coeffs().size());
    for (const auto &a : f.coeffs()) {
        out.push_back(a * c);
    }
    return series(std::move(out));
}

series cauchy_mul(const series &f, const series &g)
{
    const int n = aligned_order(f, g);
    const auto m = f.get_mode();
    // Leading zeros are common (nonunit powers), skip them in the inner loop.
    const int fo = ord_deg(f, 0.0).ord.value_or(n + 1);
    const int go = ord_deg(g, 0.0).ord.value_or(n + 1);
    std::vector<coefficient> out(static_cast<std::size_t>(n) + 1, coefficient::zero(m));
    for (int i = fo; i <= n; ++i) {
        if (f[i].is_zero(0.0)) {
            continue;
        }
        for (int j = go; i + j <= n; ++j) {
            out[static_cast<std::size_t>(i + j)] += f[i] * g[j];
        }
    }
    return series(std::move(out));
}

series pow(const series &f, unsigned k)
{
    series result = series::one(f.get_mode(), f.order());
    for (unsigned i = 0; i < k; ++i) {
        result = cauchy_mul(result, f);
    }
    return result;
}

series mul_inverse(const series &f, double tol)
{
    if (f[0].is_zero(tol)) {
        throw error(error_kind::zero_constant_term, "multiplicative inverse needs a_0 != 0");
    }
    const int n = f.order();
    const auto inv0 = f[0].inverse();
    std::vector<coefficient> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(inv0);
    for (int i = 1; i <= n; ++i) {
        coefficient acc = coefficient::zero(f.get_mode());
        for (int j = 1; j <= i; ++j) {
            acc += f[j] * out[static_cast<std::size_t>(i - j)];
        }
        out.push_back(-(acc * inv0));
    }
    return series(std::move(out));
}

series formal_derivative(const series &f, unsigned k)
{
    if (static_cast<long>(k) > f.order()) {
        throw error(error_kind::derivative_order_exceeded,
                    "derivative order " + std::to_string(k) + " exceeds series order " + std::to_string(f.order()));
    }
    const int n = f.order() - static_cast<int>(k);
    std::vector<coefficient> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        // (i+k)!/i! as a falling product
        long factor = 1;
        for (unsigned j = 1; j <= k; ++j) {
            factor *= i + static_cast<long>(j);
        }
        out.push_back(f[i + static_cast<int>(k)] * factor);
    }
    return series(std::move(out));
}

ord_deg_result ord_deg(const series &f, double tol)
{
    ord_deg_result r;
    for (int n = 0; n <= f.order(); ++n) {
        if (!f[n].is_zero(tol)) {
            if (!r.ord) {
                r.ord = n;
            }
            r.deg_lower_bound = n;
        }
    }
    r.truncated = r.ord.has_value();
    return r;
}

bool equal(const series &f, const series &g, double tol)
{
    check_modes(f, g);
    if (f.order() != g.order()) {
        return false;
    }
    for (int n = 0; n <= f.order(); ++n) {
        if (!equal(f[n], g[n], tol)) {
            return false;
        }
    }
    return true;
}

bool operator==(const series &f, const series &g)
{
    return equal(f, g, default_tolerance);
}

double max_abs_difference(const series &f, const series &g, int count)
{
    check_modes(f, g);
    const int n = std::min({count - 1, f.order(), g.order()});
    double out = 0.0;
    for (int i = 0; i <= n; ++i) {
        out = std::max(out, (f[i] - g[i]).abs());
    }
    return out;
}

} // namespace fps
