#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library beyond plain data types, so agreement is a real cross-check.

#include <gmpxx.h>

#include <cstddef>
#include <numeric>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Matrix = std::vector<std::vector<Q>>;

inline Matrix zeros(int n)
{
    return Matrix(n, std::vector<Q>(n, Q(0)));
}

inline Matrix mul(const Matrix& a, const Matrix& b)
{
    const int n = static_cast<int>(a.size());
    Matrix c = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (int j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Matrix commutator(const Matrix& a, const Matrix& b)
{
    Matrix ab = mul(a, b);
    const Matrix ba = mul(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j)
            ab[i][j] -= ba[i][j];
    return ab;
}

inline bool is_zero(const Matrix& a)
{
    for (const auto& row : a)
        for (const Q& x : row)
            if (x != 0)
                return false;
    return true;
}

inline std::size_t rank(Matrix rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            const Q f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

/// Row tableau of a left-justified pyramid, boxes numbered row by row from 0.
struct Tableau {
    std::vector<int> lambda;
    std::vector<int> row;  // 1-based row of box a
    std::vector<int> col;  // 1-based column of box a
    int N = 0;

    explicit Tableau(std::vector<int> lambdas) : lambda(std::move(lambdas))
    {
        for (std::size_t i = 0; i < lambda.size(); ++i)
            for (int c = 1; c <= lambda[i]; ++c) {
                row.push_back(static_cast<int>(i) + 1);
                col.push_back(c);
                ++N;
            }
    }

    /// sum of e_ab over boxes with row(a) = i, row(b) = j, col(b) - col(a) = r
    Matrix E(int i, int j, int r) const
    {
        Matrix m = zeros(N);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (row[a] == i && row[b] == j && col[b] - col[a] == r)
                    m[a][b] = 1;
        return m;
    }

    /// The nilpotent moving each box to its left neighbour: sum e_{a, right(a)}.
    Matrix nilpotent() const
    {
        Matrix m = zeros(N);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (row[a] == row[b] && col[b] == col[a] + 1)
                    m[a][b] = 1;
        return m;
    }

    /// dim { X in gl_N : [X, e] = 0 } by rank of X -> [X, e].
    int centralizer_dim() const
    {
        const Matrix e = nilpotent();
        Matrix rows;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                Matrix x = zeros(N);
                x[a][b] = 1;
                const Matrix c = commutator(x, e);
                std::vector<Q> flat;
                for (const auto& r : c)
                    flat.insert(flat.end(), r.begin(), r.end());
                rows.push_back(std::move(flat));
            }
        return N * N - static_cast<int>(rank(std::move(rows)));
    }

    /// (1/2N) tr(ad X ad Y) over the degree-zero subalgebra spanned by e_ab
    /// with col(a) = col(b).
    Q degree_zero_killing(const Matrix& x, const Matrix& y) const
    {
        std::vector<std::pair<int, int>> basis;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (col[a] == col[b])
                    basis.emplace_back(a, b);
        Q trace = 0;
        for (auto [a, b] : basis) {
            Matrix u = zeros(N);
            u[a][b] = 1;
            // coefficient of e_ab in [x, [y, e_ab]]
            trace += commutator(x, commutator(y, u))[a][b];
        }
        return trace / (2 * N);
    }
};

/// Truncated power series product.
inline std::vector<long> series_mul(const std::vector<long>& a, const std::vector<long>& b)
{
    std::vector<long> c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

/// prod_{s>=0} prod_{l=1}^n (1 - q^{l+s})^{-lambda_{n-l+1}} to q^cap, each
/// factor expanded as the explicit geometric series.
inline std::vector<long> w_series(const std::vector<int>& lambda, int cap)
{
    const int n = static_cast<int>(lambda.size());
    std::vector<long> out(cap + 1, 0);
    out[0] = 1;
    for (int l = 1; l <= n; ++l)
        for (int d = l; d <= cap; ++d) {
            std::vector<long> geo(cap + 1, 0);
            for (int e = 0; e <= cap; e += d)
                geo[e] = 1;
            for (int t = 0; t < lambda[n - l]; ++t)
                out = series_mul(out, geo);
        }
    return out;
}

/// Partition numbers p(0..cap) by Euler's pentagonal recurrence.
inline std::vector<long> partitions(int cap)
{
    std::vector<long> p(cap + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= cap; ++m)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            const long sign = k % 2 ? 1 : -1;
            p[m] += sign * p[m - g1];
            if (g2 <= m)
                p[m] += sign * p[m - g2];
        }
    return p;
}

}  // namespace oracle
