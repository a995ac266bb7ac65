#ifndef NILSTRAT_JORDAN_HPP
#define NILSTRAT_JORDAN_HPP

#include <cstddef>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "partition.hpp"

namespace nilstrat {

/// Nilpotent matrix in Jordan normal form with blocks mu_1, mu_2, ... down
/// the diagonal, ones on each block's superdiagonal.
template <typename Field = RationalField>
Matrix<Field> jordan_matrix(const Partition& mu, Field field = Field{}) {
    const auto n = static_cast<std::size_t>(mu.size());
    Matrix<Field> m(n, n, field);
    std::size_t offset = 0;
    for (int block : mu.parts()) {
        for (int k = 0; k + 1 < block; ++k) {
            m.set(offset + k, offset + k + 1, m.field().one());
        }
        offset += static_cast<std::size_t>(block);
    }
    return m;
}

/// Ranks of N^0, N^1, ... up to and including the first zero power.
/// Throws not-nilpotent as soon as the ranks stall above zero.
/// Uses rowspace(N^k) = rowspace(N^(k-1)) N, so powers are never formed.
template <typename Field>
std::vector<std::size_t> nilpotent_rank_sequence(const Matrix<Field>& n) {
    detail::require_square(n);
    std::vector<std::size_t> ranks{n.rows()};
    if (n.rows() == 0) return ranks;
    Matrix<Field> basis = row_basis(n);
    while (true) {
        const std::size_t r = basis.rows();
        if (r == ranks.back() && r != 0) fail(ErrorKind::not_nilpotent, "matrix is not nilpotent");
        ranks.push_back(r);
        if (r == 0) return ranks;
        basis = row_basis(mat_mul(basis, n));
    }
}

/// Over Q the sequence is computed in integers: scaling N by the common
/// denominator leaves every rank(N^k) unchanged, and N is applied row by row
/// through its nonzero entries.
inline std::vector<std::size_t> nilpotent_rank_sequence(const Matrix<RationalField>& n) {
    detail::require_square(n);
    const std::size_t size = n.rows();
    std::vector<std::size_t> ranks{size};
    if (size == 0) return ranks;

    BigInt l = 1;
    for (const auto& v : n.entries()) {
        if (!v.is_zero() && boost::multiprecision::denominator(v) != 1) {
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
        }
    }
    std::vector<std::vector<std::pair<std::size_t, BigInt>>> sparse(size);
    detail::IntegerRows rows(size, std::vector<BigInt>(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            const auto& v = n(i, j);
            if (v.is_zero()) continue;
            BigInt scaled = boost::multiprecision::numerator(v) * (l / boost::multiprecision::denominator(v));
            rows[i][j] = scaled;
            sparse[i].emplace_back(j, std::move(scaled));
        }
    }

    auto basis = detail::integer_echelon(std::move(rows), size);
    while (true) {
        const std::size_t r = basis.size();
        if (r == ranks.back() && r != 0) fail(ErrorKind::not_nilpotent, "matrix is not nilpotent");
        ranks.push_back(r);
        if (r == 0) return ranks;
        detail::IntegerRows next(r, std::vector<BigInt>(size));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < size; ++k) {
                const auto& b = basis[i][k];
                if (b.is_zero()) continue;
                for (const auto& [j, v] : sparse[k]) next[i][j] += b * v;
            }
        }
        basis = detail::integer_echelon(std::move(next), size);
    }
}

template <typename Field>
bool is_nilpotent(const Matrix<Field>& n) {
    detail::require_square(n);
    return mat_pow(n, n.rows()).is_zero();
}

/// Jordan type nu(N). The drops r_{i-1} - r_i of the rank sequence count
/// blocks of length at least i, i.e. they form the conjugate partition.
template <typename Field>
Partition jordan_type(const Matrix<Field>& n) {
    const auto ranks = nilpotent_rank_sequence(n);
    std::vector<int> at_least;
    for (std::size_t i = 1; i < ranks.size(); ++i) {
        at_least.push_back(static_cast<int>(ranks[i - 1] - ranks[i]));
    }
    return conjugate(Partition::from_sorted(std::move(at_least)));
}

/// log M = sum_{k=1}^{n-1} (-1)^{k+1} (M - I)^k / k for unipotent M.
inline Matrix<RationalField> unipotent_log(const Matrix<RationalField>& m) {
    detail::require_square(m);
    const std::size_t n = m.rows();
    const auto nil = mat_sub(m, Matrix<RationalField>::identity(n));
    if (!is_nilpotent(nil)) fail(ErrorKind::not_unipotent, "M - I is not nilpotent");
    Matrix<RationalField> sum(n, n);
    Matrix<RationalField> power = nil;
    for (std::size_t k = 1; k < n && !power.is_zero(); ++k) {
        const Rational coeff = Rational(k % 2 ? 1 : -1, static_cast<long long>(k));
        sum = mat_add(sum, scalar_mul(coeff, power));
        power = mat_mul(power, nil);
    }
    return sum;
}

/// The series needs division by k, which F_p cannot always do.
inline Matrix<PrimeField> unipotent_log(const Matrix<PrimeField>& m) {
    fail(ErrorKind::unsupported_domain, "unipotent_log requires rational entries, got " + m.field().describe());
}

}  // namespace nilstrat

#endif
