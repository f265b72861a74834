#ifndef FPS_INVERSION_HPP
#define FPS_INVERSION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <fps/analytic.hpp>
#include <fps/coefficient.hpp>
#include <fps/series.hpp>

namespace fps
{

// Compositional inverse of a nonunit series with a_1 != 0:
//   b_1 = 1/a_1,  b_n = -(b_1 a_n^(1) + ... + b_{n-1} a_n^(n-1)) / a_1^n,
// where a_n^(k) = [z^n] f^k. Throws not_nonunit or zero_linear_term.
series reversion(const series &f, double tol = default_tolerance);

// Truncation of the generalized Pascal matrix P(A): entry (k, n) is
// C(n, k) A^(n-k) for n >= k and 0 below the diagonal.
class pascal_matrix
{
public:
    pascal_matrix(const coefficient &shift, int dim);

    const coefficient &shift() const noexcept
    {
        return m_shift;
    }
    int dim() const noexcept
    {
        return m_dim;
    }
    const coefficient &operator()(int row, int col) const
    {
        return m_entries[static_cast<std::size_t>(row * m_dim + col)];
    }

private:
    coefficient m_shift;
    int m_dim;
    std::vector<coefficient> m_entries;
};

// Solves P(A) b = rhs restricted to the leading (N+1) x (N+1) block, N = order(rhs),
// by back substitution from the last row upward. Exact in exact mode.
series pascal_solve(const coefficient &shift, const series &rhs);

enum class existence_flag { proved_finite, heuristic_yes, heuristic_no, unknown };

std::string_view to_string(existence_flag e) noexcept;

struct left_inverse_report {
    // Truncated left inverse g with g o f = z mod z^(N+1).
    series candidate;
    existence_flag existence = existence_flag::unknown;
    // Ratio-test estimate of the radius of h = (f - a_0)^[-1].
    double radius_estimate = infinite_radius;
    std::string detail;
};

// Left composition inverse of a possibly-unit f with a_1 != 0. The candidate is
// h(z - a_0) with h = reversion(f - a_0), obtained by polynomial substitution.
// Whether the infinite Pascal system is solvable is not decidable from a
// truncation; the existence flag is a ratio-test heuristic on h, bracketed by
// factors 2 (yes) and 1/2 (no) around |a_0|.
left_inverse_report left_inverse(const series &f, double tol = default_tolerance);

// True when g1 and g2 coincide; both must satisfy compose_general(g_i, f) = z at
// truncation or precondition_failed is thrown.
bool uniqueness_check(const series &f, const series &g1, const series &g2, double tol = default_tolerance);

struct uniqueness_search_result {
    int trials = 0;
    // Number of distinct candidate pairs that both composed to z.
    int counterexamples = 0;
};

// Randomized search for two distinct truncated left inverses of the same f.
// Each trial perturbs the computed candidate in one coefficient and checks
// whether the perturbed series still composes to z.
uniqueness_search_result uniqueness_search(const series &f, int trials, std::uint64_t seed);

} // namespace fps

#endif
