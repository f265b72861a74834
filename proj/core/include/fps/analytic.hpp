#ifndef FPS_ANALYTIC_HPP
#define FPS_ANALYTIC_HPP

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <fps/coefficient.hpp>
#include <fps/series.hpp>

namespace fps
{

inline constexpr double infinite_radius = std::numeric_limits<double>::infinity();

// Caller metadata: does g^(k)(z0) converge for every k on |z0| = r(g)?
enum class boundary_summable { yes, no, unknown };

std::string_view to_string(boundary_summable b) noexcept;
boundary_summable parse_boundary_summable(std::string_view text);

// An infinite outer series given by a coefficient generator.
//
// The radius of convergence is always supplied by whoever builds the object;
// nothing here infers it. An optional closed form for the Taylor-shift
// coefficients g^(n)(a)/n! lets exact-mode compositions with a unit inner
// series stay exact.
class analytic_series
{
public:
    // Must be reentrant: compositions may call it concurrently.
    using generator_fn = std::function<coefficient(int n, mode m)>;
    // g^(n)(center)/n! in the mode of center, or nullopt if that mode cannot
    // represent it (e.g. e^a for rational a != 0).
    using shift_fn = std::function<std::optional<coefficient>(const coefficient &center, int n)>;

    analytic_series(std::string name, generator_fn generator, double radius,
                    boundary_summable boundary = boundary_summable::unknown, shift_fn shift = {});

    const std::string &name() const noexcept
    {
        return m_name;
    }
    double radius() const noexcept
    {
        return m_radius;
    }
    boundary_summable boundary() const noexcept
    {
        return m_boundary;
    }

    coefficient coefficient_at(int n, mode m) const;
    series truncate(int order, mode m) const;

    bool has_closed_shift() const noexcept
    {
        return static_cast<bool>(m_shift);
    }
    std::optional<coefficient> closed_shift(const coefficient &center, int n) const;

    analytic_series with_boundary(boundary_summable b) const;
    // The formal derivative g'; same radius and boundary metadata.
    analytic_series derivative() const;

private:
    std::string m_name;
    generator_fn m_generator;
    double m_radius;
    boundary_summable m_boundary;
    shift_fn m_shift;
};

// sum z^n, r = 1. Closed-form shift 1/(1-a)^(n+1).
analytic_series geometric_series();
// 2^k sum_{n>=k} z^n, r = 1.
analytic_series geometric_tail_series(unsigned k);
// sum z^n/n!, entire.
analytic_series exp_series();
// sum_{n>=1} z^n/n^p, r = 1.
analytic_series polylog_series(unsigned p);
// sum n! z^n, r = 0.
analytic_series factorial_series();

// Registry lookup by "name" or "name:param": geometric, exp, factorial,
// polylog:p, tail:k. Throws invalid_argument on unknown names.
analytic_series lookup_outer(std::string_view spec);

struct radius_estimate {
    // +infinity when too few nonzero coefficients are available.
    double value = infinite_radius;
    int pairs_used = 0;
    // Always true; the value comes from a ratio test on finitely many terms.
    bool is_estimate = true;
};

// Ratio-test estimate over the last quarter of the stored coefficients, taking
// the geometric mean of |c_m / c_n|^(1/(n-m)) over consecutive nonzero
// coefficients c_m, c_n. The window widens into the upper half when the last
// quarter holds fewer than two nonzero coefficients.
radius_estimate estimate_radius(const series &f, double tol = default_tolerance);

} // namespace fps

#endif
