#ifndef NILSTRAT_MATRIX_HPP
#define NILSTRAT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace nilstrat {

/*
 * Dense row-major matrix over an exact field.
 *
 * Field is RationalField or PrimeField. The field instance travels with the
 * matrix; binary operations require equal fields (same modulus).
 */
template <typename Field>
class Matrix {
public:
    using field_type = Field;
    using value_type = typename Field::value_type;

    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, Field field = Field{})
        : m_field(std::move(field)), m_rows(rows), m_cols(cols), m_entries(rows * cols, m_field.zero()) {}

    /// Row-major integer literal, mainly for tests.
    Matrix(std::initializer_list<std::initializer_list<long long>> rows, Field field = Field{})
        : m_field(std::move(field)), m_rows(rows.size()), m_cols(rows.size() ? rows.begin()->size() : 0) {
        m_entries.reserve(m_rows * m_cols);
        for (const auto& row : rows) {
            if (row.size() != m_cols) fail(ErrorKind::dimension_mismatch, "ragged matrix literal");
            for (long long v : row) m_entries.push_back(m_field.from_int(v));
        }
    }

    static Matrix identity(std::size_t n, Field field = Field{}) {
        Matrix m(n, n, std::move(field));
        for (std::size_t i = 0; i < n; ++i) m.m_entries[i * n + i] = m.m_field.one();
        return m;
    }

    std::size_t rows() const noexcept { return m_rows; }
    std::size_t cols() const noexcept { return m_cols; }
    bool is_square() const noexcept { return m_rows == m_cols; }
    const Field& field() const noexcept { return m_field; }

    const value_type& operator()(std::size_t i, std::size_t j) const { return m_entries[i * m_cols + j]; }

    /// Stores a value; prime-field callers must pass a reduced residue.
    void set(std::size_t i, std::size_t j, value_type v) { m_entries[i * m_cols + j] = std::move(v); }
    void set_int(std::size_t i, std::size_t j, long long v) { m_entries[i * m_cols + j] = m_field.from_int(v); }

    const std::vector<value_type>& entries() const noexcept { return m_entries; }

    bool is_zero() const {
        for (const auto& v : m_entries) {
            if (!m_field.is_zero(v)) return false;
        }
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.m_field == b.m_field && a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_entries == b.m_entries;
    }

private:
    Field m_field{};
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<value_type> m_entries;
};

using RationalMatrix = Matrix<RationalField>;
using PrimeMatrix = Matrix<PrimeField>;

namespace detail {

template <typename Field>
void require_same_field(const Matrix<Field>& a, const Matrix<Field>& b) {
    if (!(a.field() == b.field())) {
        fail(ErrorKind::domain_mismatch, a.field().describe() + " vs " + b.field().describe());
    }
}

inline std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

template <typename Field>
void require_same_shape(const Matrix<Field>& a, const Matrix<Field>& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(ErrorKind::dimension_mismatch, dims(a.rows(), a.cols()) + " vs " + dims(b.rows(), b.cols()));
    }
}

template <typename Field>
void require_square(const Matrix<Field>& a) {
    if (!a.is_square()) fail(ErrorKind::not_square, "matrix is " + dims(a.rows(), a.cols()));
}

}  // namespace detail

template <typename Field>
Matrix<Field> mat_add(const Matrix<Field>& a, const Matrix<Field>& b) {
    detail::require_same_shape(a, b);
    Matrix<Field> out(a.rows(), a.cols(), a.field());
    const auto& f = a.field();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& x = a(i, j);
            const auto& y = b(i, j);
            if (f.is_zero(y)) {
                out.set(i, j, x);
            } else if (f.is_zero(x)) {
                out.set(i, j, y);
            } else {
                out.set(i, j, f.add(x, y));
            }
        }
    }
    return out;
}

template <typename Field>
Matrix<Field> mat_sub(const Matrix<Field>& a, const Matrix<Field>& b) {
    detail::require_same_shape(a, b);
    Matrix<Field> out(a.rows(), a.cols(), a.field());
    const auto& f = a.field();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, f.sub(a(i, j), b(i, j)));
    }
    return out;
}

template <typename Field>
Matrix<Field> scalar_mul(const typename Field::value_type& c, const Matrix<Field>& a) {
    Matrix<Field> out(a.rows(), a.cols(), a.field());
    const auto& f = a.field();
    if (f.is_zero(c)) return out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, f.mul(c, a(i, j)));
    }
    return out;
}

template <typename Field>
Matrix<Field> mat_mul(const Matrix<Field>& a, const Matrix<Field>& b) {
    detail::require_same_field(a, b);
    if (a.cols() != b.rows()) {
        fail(ErrorKind::dimension_mismatch,
             "cannot multiply " + detail::dims(a.rows(), a.cols()) + " by " + detail::dims(b.rows(), b.cols()));
    }
    const auto& f = a.field();
    Matrix<Field> out(a.rows(), b.cols(), f);
    std::vector<typename Field::value_type> row(b.cols(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(row.begin(), row.end(), f.zero());
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (f.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const auto& bkj = b(k, j);
                if (f.is_zero(bkj)) continue;
                row[j] = f.add(row[j], f.mul(aik, bkj));
            }
        }
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, j, row[j]);
    }
    return out;
}

/// Square-and-multiply; mat_pow(a, 0) is the identity.
template <typename Field>
Matrix<Field> mat_pow(const Matrix<Field>& a, std::uint64_t k) {
    detail::require_square(a);
    Matrix<Field> result = Matrix<Field>::identity(a.rows(), a.field());
    Matrix<Field> base = a;
    while (k) {
        if (k & 1) result = mat_mul(result, base);
        k >>= 1;
        if (k) base = mat_mul(base, base);
    }
    return result;
}

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
template <typename Field>
Matrix<Field> kron(const Matrix<Field>& a, const Matrix<Field>& b) {
    detail::require_same_field(a, b);
    const auto& f = a.field();
    Matrix<Field> out(a.rows() * b.rows(), a.cols() * b.cols(), f);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& aij = a(i, j);
            if (f.is_zero(aij)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const auto& bkl = b(k, l);
                    if (f.is_zero(bkl)) continue;
                    out.set(i * b.rows() + k, j * b.cols() + l, f.mul(aij, bkl));
                }
            }
        }
    }
    return out;
}

/// Block-diagonal [[a, 0], [0, b]].
template <typename Field>
Matrix<Field> direct_sum(const Matrix<Field>& a, const Matrix<Field>& b) {
    detail::require_same_field(a, b);
    Matrix<Field> out(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
    }
    return out;
}

namespace detail {

using IntegerRows = std::vector<std::vector<BigInt>>;

/*
 * Echelon basis of the row space of an integer matrix over Q.
 *
 * A row with entry f under the pivot p becomes (p/g) row - (f/g) pivot_row
 * with g = gcd(p, f), then is divided by its content. Rows with a zero under
 * the pivot are not touched, so block-structured input stays cheap and
 * entries stay small.
 */
inline IntegerRows integer_echelon(IntegerRows a, std::size_t cols) {
    IntegerRows basis;
    for (std::size_t col = 0; col < cols && !a.empty(); ++col) {
        std::size_t pivot = a.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i][col].is_zero()) continue;
            if (pivot == a.size() || abs(a[i][col]) < abs(a[pivot][col])) pivot = i;
        }
        if (pivot == a.size()) continue;
        std::vector<BigInt> prow = std::move(a[pivot]);
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(pivot));
        if (prow[col] < 0) {
            for (auto& v : prow) v = -v;
        }
        std::vector<std::size_t> support;
        for (std::size_t j = col + 1; j < cols; ++j) {
            if (!prow[j].is_zero()) support.push_back(j);
        }

        const BigInt& p = prow[col];
        for (auto& row : a) {
            if (row[col].is_zero()) continue;
            const BigInt g = gcd(p, row[col]);
            const BigInt row_scale = p / g;
            const BigInt pivot_scale = row[col] / g;
            row[col] = 0;
            const bool scaled = row_scale != 1;
            if (scaled) {
                for (std::size_t j = col + 1; j < cols; ++j) {
                    if (!row[j].is_zero()) row[j] *= row_scale;
                }
            }
            for (std::size_t j : support) row[j] -= pivot_scale * prow[j];
            if (scaled) {
                BigInt content = 0;
                for (std::size_t j = col + 1; j < cols && content != 1; ++j) {
                    if (!row[j].is_zero()) content = gcd(content, row[j]);
                }
                if (content > 1) {
                    for (std::size_t j = col + 1; j < cols; ++j) {
                        if (!row[j].is_zero()) row[j] /= content;
                    }
                }
            }
        }
        basis.push_back(std::move(prow));
    }
    return basis;
}

/// Rows scaled by the lcm of their denominators; the row space is unchanged.
inline IntegerRows clear_denominators(const Matrix<RationalField>& m) {
    IntegerRows rows(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& v = m(i, j);
            if (v.is_zero()) continue;
            const auto& d = boost::multiprecision::denominator(v);
            if (d != 1) l = boost::multiprecision::lcm(l, d);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& v = m(i, j);
            if (v.is_zero()) continue;
            rows[i][j] = boost::multiprecision::numerator(v);
            if (l != 1) rows[i][j] *= l / boost::multiprecision::denominator(v);
        }
    }
    return rows;
}

}  // namespace detail

/// Linearly independent rows spanning the row space of m, in echelon form.
inline Matrix<RationalField> row_basis(const Matrix<RationalField>& m) {
    const auto rows = detail::integer_echelon(detail::clear_denominators(m), m.cols());
    Matrix<RationalField> out(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!rows[i][j].is_zero()) out.set(i, j, Rational(rows[i][j]));
        }
    }
    return out;
}

/// Row space basis over F_p by ordinary Gaussian elimination.
inline Matrix<PrimeField> row_basis(const Matrix<PrimeField>& m) {
    const auto& f = m.field();
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < m.rows() && a[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        std::swap(a[pivot_row], a[rank]);
        const auto inv = f.inv(a[rank][col]);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (a[i][col] == 0) continue;
            const auto factor = f.mul(a[i][col], inv);
            for (std::size_t j = col; j < m.cols(); ++j) {
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[rank][j]));
            }
        }
        ++rank;
    }
    Matrix<PrimeField> out(rank, m.cols(), f);
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, a[i][j]);
    }
    return out;
}

/// Rank over Q, by exact fraction-free elimination over Z.
inline std::size_t rank(const Matrix<RationalField>& m) {
    return detail::integer_echelon(detail::clear_denominators(m), m.cols()).size();
}

/// Rank over F_p.
inline std::size_t rank(const Matrix<PrimeField>& m) { return row_basis(m).rows(); }

/// Gauss-Jordan inverse; throws singular.
template <typename Field>
Matrix<Field> inverse(const Matrix<Field>& m) {
    detail::require_square(m);
    const auto& f = m.field();
    const std::size_t n = m.rows();
    Matrix<Field> a = m;
    Matrix<Field> inv = Matrix<Field>::identity(n, f);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && f.is_zero(a(p, col))) ++p;
        if (p == n) fail(ErrorKind::singular, "matrix is not invertible");
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) {
                auto t = a(p, j);
                a.set(p, j, a(col, j));
                a.set(col, j, std::move(t));
                auto u = inv(p, j);
                inv.set(p, j, inv(col, j));
                inv.set(col, j, std::move(u));
            }
        }
        const auto scale = f.inv(a(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            a.set(col, j, f.mul(scale, a(col, j)));
            inv.set(col, j, f.mul(scale, inv(col, j)));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || f.is_zero(a(i, col))) continue;
            const auto factor = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.set(i, j, f.sub(a(i, j), f.mul(factor, a(col, j))));
                inv.set(i, j, f.sub(inv(i, j), f.mul(factor, inv(col, j))));
            }
        }
    }
    return inv;
}

}  // namespace nilstrat

#endif
