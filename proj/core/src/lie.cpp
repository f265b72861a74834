#include <fps/lie.hpp>

#include <algorithm>
#include <utility>

#include <fps/composition.hpp>
#include <fps/error.hpp>
#include <fps/inversion.hpp>

namespace fps
{

namespace
{

// D(f) padded with zeros back to order(f). Only exact where the padded
// coefficient is multiplied by a vanishing one, i.e. when the other factor
// is nonunit.
series padded_derivative(const series &f, unsigned k)
{
    const int n = f.order();
    if (static_cast<int>(k) > n) {
        return series::zero(f.get_mode(), n);
    }
    return formal_derivative(f, k).extended(n);
}

} // namespace

group_element::group_element(series s, double tol) : m_series(std::move(s))
{
    if (!m_series[0].is_zero(tol)) {
        throw error(error_kind::not_nonunit, "group elements have a_0 = 0");
    }
    if (m_series.order() < 1 || m_series[1].is_zero(tol)) {
        throw error(error_kind::zero_linear_term, "group elements have a_1 != 0");
    }
    m_series = m_series.with_coefficient(0, coefficient::zero(m_series.get_mode()));
}

group_element group_element::identity(mode m, int order)
{
    return group_element(series::identity(m, order));
}

algebra_element::algebra_element(series s, double tol) : m_series(std::move(s))
{
    if (!m_series[0].is_zero(tol)) {
        throw error(error_kind::not_nonunit, "algebra elements have a_0 = 0");
    }
    m_series = m_series.with_coefficient(0, coefficient::zero(m_series.get_mode()));
}

group_element group_mul(const group_element &g, const group_element &f)
{
    return group_element(compose_nonunit(g.get_series(), f.get_series()));
}

group_element group_inv(const group_element &f)
{
    return group_element(reversion(f.get_series()));
}

algebra_element lie_bracket(const algebra_element &f, const algebra_element &g)
{
    const int n = std::min(f.order(), g.order());
    const auto fs = f.get_series().truncated(n);
    const auto gs = g.get_series().truncated(n);
    // The top padded entry of each derivative meets a_0 = 0 of the other factor.
    return algebra_element(fs * padded_derivative(gs, 1) - padded_derivative(fs, 1) * gs);
}

series invariant_field_derivative(const series &g, const algebra_element &f1, const algebra_element &f2)
{
    const int n = std::min({g.order(), f1.order(), f2.order()});
    const auto gs = g.truncated(n);
    const auto a = f1.get_series().truncated(n);
    const auto b = f2.get_series().truncated(n);
    // ord(f1 f2) >= 2 and ord(f2) >= 1 absorb the padding of g'', g' and f1'.
    return padded_derivative(gs, 2) * (b * a) - padded_derivative(gs, 1) * (padded_derivative(a, 1) * b);
}

group_element similarity(const group_element &g, const group_element &f)
{
    return group_mul(group_mul(g, f), group_inv(g));
}

bool levelset_member(const group_element &f, const std::function<bool(const coefficient &)> &slope_predicate)
{
    return slope_predicate(f.slope());
}

} // namespace fps
