#include <fps/coefficient.hpp>

#include <cmath>
#include <string>
#include <utility>

#include <fps/error.hpp>

namespace fps
{

namespace
{

[[noreturn]] void throw_mismatch()
{
    throw error(error_kind::mode_mismatch, "exact and floating coefficients cannot be combined");
}

gaussian_rational &as_exact(std::variant<gaussian_rational, std::complex<double>> &v)
{
    return std::get<0>(v);
}

} // namespace

std::string_view to_string(mode m) noexcept
{
    return m == mode::exact ? "exact" : "float";
}

mode parse_mode(std::string_view text)
{
    if (text == "exact") {
        return mode::exact;
    }
    if (text == "float") {
        return mode::floating;
    }
    throw error(error_kind::invalid_argument, "unknown mode '" + std::string(text) + "'");
}

coefficient::coefficient() : m_value(gaussian_rational{}) {}

coefficient::coefficient(gaussian_rational value) : m_value(std::move(value))
{
    auto &g = as_exact(m_value);
    g.re.canonicalize();
    g.im.canonicalize();
}

coefficient::coefficient(std::complex<double> value) : m_value(value) {}

coefficient coefficient::zero(mode m)
{
    return integer(0, m);
}

coefficient coefficient::one(mode m)
{
    return integer(1, m);
}

coefficient coefficient::integer(long n, mode m)
{
    if (m == mode::exact) {
        return coefficient(gaussian_rational{rational(n), rational(0)});
    }
    return coefficient(std::complex<double>(static_cast<double>(n), 0.0));
}

coefficient coefficient::real(const rational &re, mode m)
{
    return complex(re, rational(0), m);
}

coefficient coefficient::complex(const rational &re, const rational &im, mode m)
{
    if (m == mode::exact) {
        return coefficient(gaussian_rational{re, im});
    }
    return coefficient(std::complex<double>(re.get_d(), im.get_d()));
}

const gaussian_rational &coefficient::exact() const
{
    if (!is_exact()) {
        throw error(error_kind::invalid_argument, "coefficient is not exact");
    }
    return std::get<0>(m_value);
}

std::complex<double> coefficient::to_complex() const
{
    if (is_exact()) {
        const auto &g = std::get<0>(m_value);
        return {g.re.get_d(), g.im.get_d()};
    }
    return std::get<1>(m_value);
}

double coefficient::abs() const
{
    return std::abs(to_complex());
}

coefficient coefficient::to_mode(mode m) const
{
    if (m == get_mode()) {
        return *this;
    }
    if (m == mode::floating) {
        return coefficient(to_complex());
    }
    const auto c = std::get<1>(m_value);
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw error(error_kind::invalid_argument, "non-finite value has no exact representation");
    }
    return coefficient(gaussian_rational{rational(c.real()), rational(c.imag())});
}

bool coefficient::is_zero(double tol) const
{
    if (is_exact()) {
        const auto &g = std::get<0>(m_value);
        return sgn(g.re) == 0 && sgn(g.im) == 0;
    }
    return std::abs(std::get<1>(m_value)) <= tol;
}

bool coefficient::is_real(double tol) const
{
    if (is_exact()) {
        return sgn(std::get<0>(m_value).im) == 0;
    }
    return std::abs(std::get<1>(m_value).imag()) <= tol;
}

coefficient coefficient::inverse() const
{
    if (is_zero(0.0)) {
        throw error(error_kind::invalid_argument, "division by zero");
    }
    if (is_exact()) {
        const auto &g = std::get<0>(m_value);
        const rational norm = g.re * g.re + g.im * g.im;
        return coefficient(gaussian_rational{g.re / norm, -g.im / norm});
    }
    return coefficient(1.0 / std::get<1>(m_value));
}

coefficient &coefficient::operator+=(const coefficient &other)
{
    if (m_value.index() != other.m_value.index()) {
        throw_mismatch();
    }
    if (is_exact()) {
        auto &g = as_exact(m_value);
        const auto &h = std::get<0>(other.m_value);
        g.re += h.re;
        g.im += h.im;
    } else {
        std::get<1>(m_value) += std::get<1>(other.m_value);
    }
    return *this;
}

coefficient &coefficient::operator-=(const coefficient &other)
{
    if (m_value.index() != other.m_value.index()) {
        throw_mismatch();
    }
    if (is_exact()) {
        auto &g = as_exact(m_value);
        const auto &h = std::get<0>(other.m_value);
        g.re -= h.re;
        g.im -= h.im;
    } else {
        std::get<1>(m_value) -= std::get<1>(other.m_value);
    }
    return *this;
}

coefficient &coefficient::operator*=(const coefficient &other)
{
    if (m_value.index() != other.m_value.index()) {
        throw_mismatch();
    }
    if (is_exact()) {
        auto &g = as_exact(m_value);
        const auto &h = std::get<0>(other.m_value);
        if (sgn(g.im) == 0 && sgn(h.im) == 0) {
            g.re *= h.re;
        } else {
            rational re = g.re * h.re - g.im * h.im;
            rational im = g.re * h.im + g.im * h.re;
            g.re = std::move(re);
            g.im = std::move(im);
        }
    } else {
        std::get<1>(m_value) *= std::get<1>(other.m_value);
    }
    return *this;
}

coefficient &coefficient::operator/=(const coefficient &other)
{
    if (m_value.index() != other.m_value.index()) {
        throw_mismatch();
    }
    return *this *= other.inverse();
}

coefficient &coefficient::operator*=(long n)
{
    if (is_exact()) {
        auto &g = as_exact(m_value);
        g.re *= n;
        g.im *= n;
    } else {
        std::get<1>(m_value) *= static_cast<double>(n);
    }
    return *this;
}

coefficient coefficient::operator-() const
{
    coefficient out(*this);
    out *= -1L;
    return out;
}

bool operator==(const coefficient &a, const coefficient &b)
{
    return equal(a, b, default_tolerance);
}

std::string coefficient::to_string() const
{
    if (is_exact()) {
        const auto &g = std::get<0>(m_value);
        if (sgn(g.im) == 0) {
            return g.re.get_str();
        }
        std::string out = sgn(g.re) == 0 ? std::string() : g.re.get_str();
        if (sgn(g.im) > 0 && !out.empty()) {
            out += '+';
        }
        return out + g.im.get_str() + "i";
    }
    const auto c = std::get<1>(m_value);
    if (c.imag() == 0.0) {
        return std::to_string(c.real());
    }
    return "(" + std::to_string(c.real()) + (c.imag() < 0 ? "" : "+") + std::to_string(c.imag()) + "i)";
}

bool equal(const coefficient &a, const coefficient &b, double tol)
{
    if (a.get_mode() != b.get_mode()) {
        throw_mismatch();
    }
    if (a.is_exact()) {
        return a.exact() == b.exact();
    }
    return std::abs(a.to_complex() - b.to_complex()) <= tol;
}

coefficient pow(const coefficient &base, unsigned exponent)
{
    coefficient result = coefficient::one(base.get_mode());
    coefficient square = base;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= square;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            square *= square;
        }
    }
    return result;
}

std::string rational_to_string(const rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

rational parse_rational(std::string_view text)
{
    rational q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0 || sgn(q.get_den()) == 0) {
        throw error(error_kind::invalid_argument, "malformed rational '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return rational(f);
}

rational binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return rational(0);
    }
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return rational(c);
}

} // namespace fps
