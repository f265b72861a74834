#ifndef FPS_SERIES_HPP
#define FPS_SERIES_HPP

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <fps/coefficient.hpp>

namespace fps
{

// A formal power series a_0 + a_1 z + ... known through z^order.
//
// Values are immutable once built. Every binary operation first aligns its
// operands to the smaller of the two orders, so each stored coefficient of a
// result is exact relative to the (infinite) inputs.
class series
{
public:
    // Throws invalid_argument on an empty coefficient list or mixed modes.
    explicit series(std::vector<coefficient> coeffs);

    // Exact series with integer coefficients; used heavily in tests.
    static series from_integers(std::initializer_list<long> coeffs, mode m = mode::exact);
    static series zero(mode m, int order);
    static series one(mode m, int order);
    static series constant(const coefficient &c, int order);
    // The identity z.
    static series identity(mode m, int order);
    static series monomial(const coefficient &c, int power, int order);

    int order() const noexcept
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    mode get_mode() const noexcept
    {
        return m_coeffs.front().get_mode();
    }
    const coefficient &operator[](int n) const
    {
        return m_coeffs[static_cast<std::size_t>(n)];
    }
    std::span<const coefficient> coeffs() const noexcept
    {
        return m_coeffs;
    }

    // Drops coefficients above new_order (new_order <= order()).
    series truncated(int new_order) const;
    // Appends zero coefficients; only meaningful when the series is polynomial data.
    series extended(int new_order) const;
    // truncated() or extended(), whichever applies.
    series resized(int new_order) const;
    series to_mode(mode m) const;
    series with_coefficient(int n, const coefficient &c) const;

    bool is_zero(double tol = default_tolerance) const;

    std::string to_string() const;

private:
    std::vector<coefficient> m_coeffs;
};

series add(const series &f, const series &g);
series sub(const series &f, const series &g);
series negate(const series &f);
series scale(const series &f, const coefficient &c);
series cauchy_mul(const series &f, const series &g);
series pow(const series &f, unsigned k);
// Throws zero_constant_term when a_0 = 0 (|a_0| <= tol in floating mode).
series mul_inverse(const series &f, double tol = default_tolerance);
// Coefficient n of the result is (n+k)!/n! a_{n+k}; the order drops by k.
series formal_derivative(const series &f, unsigned k = 1);

inline series operator+(const series &f, const series &g)
{
    return add(f, g);
}
inline series operator-(const series &f, const series &g)
{
    return sub(f, g);
}
inline series operator-(const series &f)
{
    return negate(f);
}
inline series operator*(const series &f, const series &g)
{
    return cauchy_mul(f, g);
}
inline series operator*(const coefficient &c, const series &f)
{
    return scale(f, c);
}

struct ord_deg_result {
    // Empty when every stored coefficient vanishes (ord = +infinity).
    std::optional<int> ord;
    // Largest index with a nonzero stored coefficient; empty for the zero
    // series. Only a lower bound for the true degree when truncated is set.
    std::optional<int> deg_lower_bound;
    bool truncated = false;
};

ord_deg_result ord_deg(const series &f, double tol = default_tolerance);

// Exact comparison in exact mode, coefficientwise |a_n - b_n| <= tol otherwise.
// Orders must match.
bool equal(const series &f, const series &g, double tol = default_tolerance);
bool operator==(const series &f, const series &g);

// Largest coefficientwise modulus of f - g over indices [0, count).
double max_abs_difference(const series &f, const series &g, int count);

} // namespace fps

#endif
