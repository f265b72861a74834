#ifndef FPS_COMPOSITION_HPP
#define FPS_COMPOSITION_HPP

#include <optional>
#include <string>
#include <variant>

#include <fps/analytic.hpp>
#include <fps/coefficient.hpp>
#include <fps/series.hpp>

namespace fps
{

// An outer series is either finite polynomial data (a series whose stored
// coefficients are all of it) or an infinite analytic_series.
using outer_series = std::variant<series, analytic_series>;

// Settings of the boundary probe used by gct_check when |a0| = r(g) and no
// metadata is available. Partial sums run to depth() = 10 * order terms.
struct probe_settings {
    int order = 16;
    // Derivative orders 0..max_k are probed.
    int max_k = 8;
    // Monotone growth of partial sums beyond this factor counts as divergence.
    double growth_factor = 1e6;
    // Geometric mean of the last three Cauchy-condensed term ratios at or
    // above this counts as divergence (terms decaying no faster than ~1/n).
    double condensation_threshold = 0.99;

    int depth() const noexcept
    {
        return 10 * order;
    }
};

struct composition_options {
    double tolerance = default_tolerance;
    // Cap on the number of terms summed for one Taylor-shift coefficient.
    long max_terms = 1'000'000;
    probe_settings probe{};
};

// g o f for a nonunit f, by Horner accumulation from the top coefficient of g.
// Result order is min(order(g), order(f)). Throws nonzero_constant_term.
series compose_nonunit(const series &g, const series &f, double tol = default_tolerance);

// Direct polynomial substitution g(f) by Horner's rule over series arithmetic,
// g taken as a polynomial of degree order(g). The result has the given order,
// which must not exceed order(f).
series substitute_polynomial(const series &g, const series &f, int order);

// Coefficients of g(z + a) for polynomial g, by binomial sums. Same order as g.
series taylor_shift(const series &g, const coefficient &a);

// General composition with a polynomial outer series (degree order(g)).
// The result has order min(order, order(f)); the two-argument form uses
// min(order(g), order(f)). Exact in exact mode.
series compose_general(const series &g, const series &f);
series compose_general(const series &g, const series &f, int order);

// General composition with an infinite outer series, via the Taylor-shifted
// series g_D(z) = sum g^(n)(a0)/n! z^n composed with f - a0.
// Throws composition_does_not_exist when gct_check fails,
// tolerance_not_met when a floating Taylor-shift sum does not settle, and
// exact_evaluation_unavailable in exact mode without a closed-form shift.
series compose_general(const analytic_series &g, const series &f, int order, const composition_options &opts = {});
series compose_general(const outer_series &g, const series &f, int order, const composition_options &opts = {});

// g^(n)(a)/n! for n = 0..order as a series in the mode of a.
series taylor_shift_coefficients(const analytic_series &g, const coefficient &a, int order,
                                 const composition_options &opts = {});

enum class gct_status { exists, fails, inconclusive };

std::string_view to_string(gct_status s) noexcept;

struct gct_result {
    gct_status status = gct_status::inconclusive;
    // First derivative order whose series g^(k)(a0) was found divergent.
    std::optional<int> fails_at_k;
    std::string detail;
};

// Existence test for g o f given a0 = [z^0] f.
gct_result gct_check(const analytic_series &g, const coefficient &a0, const probe_settings &probe = {});

enum class domain_kind { origin_only, open_disk, closed_disk, entire };

std::string_view to_string(domain_kind k) noexcept;

struct domain_class {
    domain_kind kind;
    double radius;
};

// Shape of the set of admissible constant terms of inner series.
// Throws insufficient_metadata for a finite positive radius without a boundary flag.
domain_class classify_domain(const analytic_series &g);

// c_n of g o f from the explicit multinomial expansion over partition_set(n, s).
// Exponentially slow; an oracle for tests only. Requires a_0(f) = 0.
coefficient multinomial_oracle(const series &g, const series &f, int n);

// The outer series' j-th formal derivative, keeping its kind.
outer_series derivative(const outer_series &g, unsigned j = 1);

// True when [z^0] f vanishes (literally in exact mode, within tol otherwise).
bool is_nonunit(const series &f, double tol = default_tolerance);

} // namespace fps

#endif
