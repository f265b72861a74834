#ifndef FPS_MATRIX_HPP
#define FPS_MATRIX_HPP

#include <vector>

#include <fps/coefficient.hpp>
#include <fps/series.hpp>

namespace fps
{

// Truncated composition matrix C_f: row k lists a_0^(k), ..., a_N^(k), the
// coefficients of f^k, for k = 0..K. Dense and row-major; when f is nonunit it
// is lower triangular in the sense a_n^(k) = 0 for n < k.
class comp_matrix
{
public:
    comp_matrix(const series &f, int rows);

    int rows() const noexcept
    {
        return static_cast<int>(m_rows.size());
    }
    int cols() const noexcept
    {
        return m_source_order + 1;
    }
    int source_order() const noexcept
    {
        return m_source_order;
    }
    mode get_mode() const noexcept
    {
        return m_rows.front().get_mode();
    }
    const coefficient &operator()(int k, int n) const
    {
        return m_rows[static_cast<std::size_t>(k)][n];
    }
    const series &row(int k) const
    {
        return m_rows[static_cast<std::size_t>(k)];
    }

private:
    int m_source_order;
    std::vector<series> m_rows;
};

// Plain dense matrix product helper for the truncated homomorphism checks.
using dense_matrix = std::vector<std::vector<coefficient>>;

dense_matrix to_dense(const comp_matrix &c);
dense_matrix multiply(const dense_matrix &a, const dense_matrix &b);
dense_matrix transpose(const dense_matrix &a);
dense_matrix leading_block(const dense_matrix &a, int size);

enum class outer_kind {
    // Coefficients of g beyond its order are unknown.
    truncated,
    // g is a polynomial of degree order(g); admits a unit inner series.
    polynomial,
};

// Composition c = C_f^T b computed columnwise.
// truncated: needs a_0(f) = 0, result order min(order(g), order(f)).
// polynomial: uses order(g) + 1 rows, result order order(f).
// Throws nonzero_constant_term for a truncated outer series and a unit f.
series matrix_compose(const series &g, const series &f, outer_kind kind = outer_kind::truncated);

} // namespace fps

#endif
