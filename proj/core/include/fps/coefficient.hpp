#ifndef FPS_COEFFICIENT_HPP
#define FPS_COEFFICIENT_HPP

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace fps
{

using rational = mpq_class;

// Arithmetic mode of a coefficient. Exact coefficients are Gaussian rationals,
// floating ones are complex doubles. The two never mix implicitly.
enum class mode { exact, floating };

std::string_view to_string(mode m) noexcept;
// Accepts "exact" and "float".
mode parse_mode(std::string_view text);

// Zero tests in floating mode use this absolute tolerance unless overridden.
inline constexpr double default_tolerance = 1e-10;

struct gaussian_rational {
    rational re;
    rational im;

    friend bool operator==(const gaussian_rational &, const gaussian_rational &) = default;
};

// An element of C in one of the two arithmetic modes.
class coefficient
{
public:
    // Exact zero.
    coefficient();
    explicit coefficient(gaussian_rational value);
    explicit coefficient(std::complex<double> value);

    static coefficient zero(mode m);
    static coefficient one(mode m);
    static coefficient integer(long n, mode m);
    static coefficient real(const rational &re, mode m);
    static coefficient complex(const rational &re, const rational &im, mode m);

    mode get_mode() const noexcept
    {
        return m_value.index() == 0 ? mode::exact : mode::floating;
    }
    bool is_exact() const noexcept
    {
        return m_value.index() == 0;
    }

    // Throws invalid_argument in floating mode.
    const gaussian_rational &exact() const;
    std::complex<double> to_complex() const;
    double abs() const;

    // Exact -> floating rounds; floating -> exact is the exact binary value.
    coefficient to_mode(mode m) const;

    // Literal zero test in exact mode, |c| <= tol in floating mode.
    bool is_zero(double tol = default_tolerance) const;
    bool is_real(double tol = default_tolerance) const;

    coefficient inverse() const;

    coefficient &operator+=(const coefficient &other);
    coefficient &operator-=(const coefficient &other);
    coefficient &operator*=(const coefficient &other);
    coefficient &operator/=(const coefficient &other);
    coefficient &operator*=(long n);

    coefficient operator-() const;

    friend coefficient operator+(coefficient a, const coefficient &b)
    {
        return a += b;
    }
    friend coefficient operator-(coefficient a, const coefficient &b)
    {
        return a -= b;
    }
    friend coefficient operator*(coefficient a, const coefficient &b)
    {
        return a *= b;
    }
    friend coefficient operator/(coefficient a, const coefficient &b)
    {
        return a /= b;
    }
    friend coefficient operator*(coefficient a, long n)
    {
        return a *= n;
    }
    friend coefficient operator*(long n, coefficient a)
    {
        return a *= n;
    }

    // Exact equality in exact mode, |a - b| <= default_tolerance in floating mode.
    friend bool operator==(const coefficient &a, const coefficient &b);

    // "p/q" for the real part, "p/q+r/si"-style text for display only.
    std::string to_string() const;

private:
    std::variant<gaussian_rational, std::complex<double>> m_value;
};

// Exact equality in exact mode; |a - b| <= tol otherwise. Throws on mode mismatch.
bool equal(const coefficient &a, const coefficient &b, double tol = default_tolerance);

// Raises z to a nonnegative integer power by repeated squaring; pow(0, 0) = 1.
coefficient pow(const coefficient &base, unsigned exponent);

// Always "p/q", including integers ("3/1").
std::string rational_to_string(const rational &q);
rational parse_rational(std::string_view text);

// n! and C(n, k) as exact rationals.
rational factorial(unsigned n);
rational binomial(unsigned n, unsigned k);

} // namespace fps

#endif
