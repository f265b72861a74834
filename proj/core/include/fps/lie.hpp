#ifndef FPS_LIE_HPP
#define FPS_LIE_HPP

#include <functional>

#include <fps/coefficient.hpp>
#include <fps/series.hpp>

namespace fps
{

// Element of the group of nonunit series with a_1 != 0 under composition.
class group_element
{
public:
    // Throws not_nonunit or zero_linear_term.
    explicit group_element(series s, double tol = default_tolerance);

    static group_element identity(mode m, int order);

    const series &get_series() const noexcept
    {
        return m_series;
    }
    const coefficient &slope() const
    {
        return m_series[1];
    }
    int order() const noexcept
    {
        return m_series.order();
    }

private:
    series m_series;
};

// Element of the Lie algebra: any nonunit series (a_1 unconstrained).
class algebra_element
{
public:
    // Throws not_nonunit.
    explicit algebra_element(series s, double tol = default_tolerance);

    const series &get_series() const noexcept
    {
        return m_series;
    }
    int order() const noexcept
    {
        return m_series.order();
    }

private:
    series m_series;
};

group_element group_mul(const group_element &g, const group_element &f);
group_element group_inv(const group_element &f);

// [f, g] = f g' - f' g, trusted through the aligned order N.
algebra_element lie_bracket(const algebra_element &f, const algebra_element &g);

// g'' f2 f1 - g' f1' f2: the derivative of the left-invariant field of f2 along
// the field of f1, evaluated at g. Exact through min(order(g), order(f1), order(f2)).
series invariant_field_derivative(const series &g, const algebra_element &f1, const algebra_element &f2);

// S_g(f) = g o f o g^[-1].
group_element similarity(const group_element &g, const group_element &f);

// Membership in the level set {f : a_1(f) in G'} for a subgroup G' of C*
// described by the predicate.
bool levelset_member(const group_element &f, const std::function<bool(const coefficient &)> &slope_predicate);

} // namespace fps

#endif
