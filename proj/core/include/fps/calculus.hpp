#ifndef FPS_CALCULUS_HPP
#define FPS_CALCULUS_HPP

#include <optional>
#include <span>
#include <vector>

#include <fps/composition.hpp>
#include <fps/series.hpp>

namespace fps
{

// d(f, g) = sum_n 2^-n |a_n - b_n| / (|a_n - b_n| + 1) over the stored
// coefficients of the aligned operands. The unobserved tail contributes at
// most tail_bound = 2^-N.
struct metric_value {
    double value = 0.0;
    double tail_bound = 0.0;
    // Exact value of the stored-range sum when every difference a_n - b_n is
    // an exact real or purely imaginary rational (so its modulus is rational).
    std::optional<rational> exact;
};

metric_value metric(const series &f, const series &g);

// Directional derivative of T_g : f -> g o f at w in direction k, (g' o w) k.
// Result order min(order(w), order(k)).
series superposition_derivative(const outer_series &g, const series &w, const series &k,
                                const composition_options &opts = {});

struct derivative_probe {
    series w;
    series k;
    // Admissible step sizes, strictly decreasing towards 0.
    std::vector<coefficient> t_values;
    // Steps dropped because w + t k left the composability domain.
    std::vector<coefficient> skipped;
    // (T_g(w + t k) - T_g(w)) / t - (g' o w) k for each admissible t.
    std::vector<series> remainder_series;
    // max_n |remainder_n| over the first `coefficients` indices.
    std::vector<double> remainders;
    // Least-squares slope of log remainder against log t; empty when fewer
    // than two remainders are positive.
    std::optional<double> slope;
};

// {1e-2, 1e-3, 1e-4, 1e-5} in floating mode, {1/10, 1/100, 1/1000} exactly.
std::vector<coefficient> default_t_sweep(mode m);

// Empirical check of the derivative limit. coefficients < 0 means all stored
// coefficients enter the remainder norm. Throws domain_exit when no step keeps
// w + t k composable.
derivative_probe finite_difference_probe(const outer_series &g, const series &w, const series &k,
                                         const std::vector<coefficient> &t_values, int coefficients = -1,
                                         const composition_options &opts = {});

// g o (f + t k) - sum_{j=0}^{n} t^j/j! (g^(j) o f) k^j.
series taylor_remainder(const outer_series &g, const series &f, const series &k, unsigned n, const coefficient &t,
                        const composition_options &opts = {});

// Least-squares slope of log(values) against log(t); empty if fewer than two
// positive samples.
std::optional<double> loglog_slope(std::span<const double> t, std::span<const double> values);

} // namespace fps

#endif
