#include <fps/matrix.hpp>

#include <algorithm>
#include <utility>

#include <fps/error.hpp>

namespace fps
{

comp_matrix::comp_matrix(const series &f, int rows) : m_source_order(f.order())
{
    if (rows < 0) {
        throw error(error_kind::invalid_argument, "row count must be nonnegative");
    }
    m_rows.reserve(static_cast<std::size_t>(rows) + 1);
    m_rows.push_back(series::one(f.get_mode(), f.order()));
    for (int k = 1; k <= rows; ++k) {
        m_rows.push_back(cauchy_mul(m_rows.back(), f));
    }
}

dense_matrix to_dense(const comp_matrix &c)
{
    dense_matrix out;
    for (int k = 0; k < c.rows(); ++k) {
        const auto coeffs = c.row(k).coeffs();
        out.emplace_back(coeffs.begin(), coeffs.end());
    }
    return out;
}

dense_matrix multiply(const dense_matrix &a, const dense_matrix &b)
{
    if (a.empty() || b.empty() || a.front().size() != b.size()) {
        throw error(error_kind::invalid_argument, "matrix shapes do not conform");
    }
    const auto m = a.front().front().get_mode();
    dense_matrix out(a.size(), std::vector<coefficient>(b.front().size(), coefficient::zero(m)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero(0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < b.front().size(); ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

dense_matrix transpose(const dense_matrix &a)
{
    if (a.empty()) {
        return {};
    }
    dense_matrix out(a.front().size(), std::vector<coefficient>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            out[j][i] = a[i][j];
        }
    }
    return out;
}

dense_matrix leading_block(const dense_matrix &a, int size)
{
    const auto s = static_cast<std::size_t>(size);
    if (a.size() < s || a.front().size() < s) {
        throw error(error_kind::invalid_argument, "block exceeds matrix");
    }
    dense_matrix out;
    for (std::size_t i = 0; i < s; ++i) {
        out.emplace_back(a[i].begin(), a[i].begin() + static_cast<std::ptrdiff_t>(s));
    }
    return out;
}

series matrix_compose(const series &g, const series &f, outer_kind kind)
{
    if (g.get_mode() != f.get_mode()) {
        throw error(error_kind::mode_mismatch, "series modes differ");
    }
    int n = 0;
    int rows = 0;
    if (kind == outer_kind::truncated) {
        if (!f[0].is_zero()) {
            throw error(error_kind::nonzero_constant_term,
                        "column sums of C_f^T b are infinite for a unit f and a truncated g");
        }
        n = std::min(g.order(), f.order());
        rows = n;
    } else {
        n = f.order();
        rows = g.order();
    }
    const comp_matrix c(f.truncated(n), rows);
    std::vector<coefficient> out(static_cast<std::size_t>(n) + 1, coefficient::zero(f.get_mode()));
    for (int col = 0; col <= n; ++col) {
        for (int k = 0; k <= rows; ++k) {
            out[static_cast<std::size_t>(col)] += c(k, col) * g[k];
        }
    }
    return series(std::move(out));
}

} // namespace fps
