#ifndef NILSTRAT_MODULI_HPP
#define NILSTRAT_MODULI_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "jordan.hpp"
#include "matrix.hpp"
#include "partition.hpp"

namespace nilstrat {

/// Default bound on the number of candidate pairs p^(2 r^2).
inline constexpr std::uint64_t default_pair_cap = std::uint64_t{1} << 24;

/// Pairs (Phi, Sigma) of invertible r x r matrices over F_p with
/// Phi Sigma Phi^-1 = Sigma^q.
struct ModuliInstance {
    std::uint64_t q = 1;
    std::size_t r = 1;
    std::uint64_t p = 2;
    std::optional<std::uint64_t> a;
    std::uint64_t cap = default_pair_cap;

    /// p^(2 r^2), saturating at UINT64_MAX.
    std::uint64_t candidate_count() const {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < 2 * r * r; ++i) {
            if (total > UINT64_MAX / p) return UINT64_MAX;
            total *= p;
        }
        return total;
    }

    void validate() const {
        if (q < 1) fail(ErrorKind::invalid_argument, "q must be positive");
        if (r < 1) fail(ErrorKind::invalid_argument, "r must be positive");
        if (!is_prime(p) || p >= PrimeField::max_modulus) {
            fail(ErrorKind::invalid_argument, "p = " + std::to_string(p) + " is not a supported prime");
        }
        if (a && *a < 1) fail(ErrorKind::invalid_argument, "a must be positive");
        const auto count = candidate_count();
        if (count > cap) {
            fail(ErrorKind::resource, "enumeration needs " + (count == UINT64_MAX ? std::string("more than 2^64")
                                                                                 : std::to_string(count)) +
                                          " candidate pairs, cap is " + std::to_string(cap));
        }
    }
};

struct ModuliPair {
    PrimeMatrix phi;
    PrimeMatrix sigma;
};

struct SigmaStrata {
    std::size_t total = 0;
    std::map<Partition, std::size_t, PartitionLess> buckets;
    std::size_t residual = 0;
};

namespace detail {

inline PrimeMatrix decode_matrix(std::uint64_t code, std::size_t r, const PrimeField& field) {
    PrimeMatrix m(r, r, field);
    for (std::size_t k = r * r; k > 0; --k) {
        m.set((k - 1) / r, (k - 1) % r, code % field.modulus());
        code /= field.modulus();
    }
    return m;
}

/// Base-p code with the first entry most significant, so numeric order of
/// codes is lexicographic order of entry tuples.
inline std::uint64_t encode_matrix(const PrimeMatrix& m) {
    std::uint64_t code = 0;
    for (const auto v : m.entries()) code = code * m.field().modulus() + v;
    return code;
}

/// GL_r(F_p) in lexicographic order of entries.
inline std::vector<PrimeMatrix> general_linear_group(std::size_t r, const PrimeField& field) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < r * r; ++i) count *= field.modulus();
    std::vector<PrimeMatrix> out;
    for (std::uint64_t code = 0; code < count; ++code) {
        auto m = decode_matrix(code, r, field);
        if (rank(m) == r) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace detail

/// All solutions, ordered lexicographically by (Phi entries, Sigma entries).
inline std::vector<ModuliPair> enumerate_pairs(const ModuliInstance& inst) {
    inst.validate();
    const PrimeField field(inst.p);
    const auto group = detail::general_linear_group(inst.r, field);

    std::vector<PrimeMatrix> sigma_q;
    sigma_q.reserve(group.size());
    for (const auto& s : group) sigma_q.push_back(mat_pow(s, inst.q));

    // Phi Sigma Phi^-1 = Sigma^q  <=>  Phi Sigma = Sigma^q Phi
    std::vector<ModuliPair> out;
    for (const auto& phi : group) {
        for (std::size_t s = 0; s < group.size(); ++s) {
            if (mat_mul(phi, group[s]) == mat_mul(sigma_q[s], phi)) out.push_back({phi, group[s]});
        }
    }
    return out;
}

/// Buckets pairs by the Jordan type of Sigma^a - I when that matrix is
/// nilpotent; every other pair is counted as residual.
inline SigmaStrata sigma_stratify(const ModuliInstance& inst) {
    if (!inst.a) fail(ErrorKind::invalid_argument, "sigma_stratify needs the exponent a");
    const auto pairs = enumerate_pairs(inst);
    SigmaStrata out;
    out.total = pairs.size();
    std::unordered_map<std::uint64_t, std::optional<Partition>> by_sigma;
    for (const auto& pair : pairs) {
        const auto code = detail::encode_matrix(pair.sigma);
        auto it = by_sigma.find(code);
        if (it == by_sigma.end()) {
            const auto shifted =
                mat_sub(mat_pow(pair.sigma, *inst.a), PrimeMatrix::identity(inst.r, pair.sigma.field()));
            std::optional<Partition> type;
            if (is_nilpotent(shifted)) type = jordan_type(shifted);
            it = by_sigma.emplace(code, std::move(type)).first;
        }
        if (it->second) {
            ++out.buckets[*it->second];
        } else {
            ++out.residual;
        }
    }
    return out;
}

/// Order of an invertible matrix in GL_r(F_p).
inline std::uint64_t multiplicative_order(const PrimeMatrix& sigma) {
    detail::require_square(sigma);
    if (rank(sigma) != sigma.rows()) fail(ErrorKind::singular, "matrix is not invertible");
    const auto id = PrimeMatrix::identity(sigma.rows(), sigma.field());
    PrimeMatrix power = sigma;
    std::uint64_t order = 1;
    while (!(power == id)) {
        power = mat_mul(power, sigma);
        ++order;
    }
    return order;
}

/// Jordan type of S - I where S = Sigma^o' and o' is the prime-to-p part of
/// the order of Sigma. S is the unipotent factor of Sigma's Jordan
/// decomposition.
inline Partition unipotent_part_type(const PrimeMatrix& sigma) {
    std::uint64_t prime_to_p = multiplicative_order(sigma);
    const auto p = sigma.field().modulus();
    while (prime_to_p % p == 0) prime_to_p /= p;
    const auto unipotent = mat_pow(sigma, prime_to_p);
    return jordan_type(mat_sub(unipotent, PrimeMatrix::identity(sigma.rows(), sigma.field())));
}

/// Number of orbits of the solution set under simultaneous conjugation by GL_r(F_p).
inline std::size_t orbit_count(const ModuliInstance& inst) {
    const auto pairs = enumerate_pairs(inst);
    const PrimeField field(inst.p);
    const auto group = detail::general_linear_group(inst.r, field);
    std::vector<PrimeMatrix> inverses;
    inverses.reserve(group.size());
    for (const auto& g : group) inverses.push_back(inverse(g));

    auto key = [](const PrimeMatrix& phi, const PrimeMatrix& sigma) {
        return std::pair{detail::encode_matrix(phi), detail::encode_matrix(sigma)};
    };
    std::map<std::pair<std::uint64_t, std::uint64_t>, bool> seen;
    for (const auto& pair : pairs) seen.emplace(key(pair.phi, pair.sigma), false);

    std::size_t orbits = 0;
    for (const auto& pair : pairs) {
        auto& flag = seen.at(key(pair.phi, pair.sigma));
        if (flag) continue;
        ++orbits;
        for (std::size_t g = 0; g < group.size(); ++g) {
            const auto phi = mat_mul(mat_mul(group[g], pair.phi), inverses[g]);
            const auto sigma = mat_mul(mat_mul(group[g], pair.sigma), inverses[g]);
            seen.at(key(phi, sigma)) = true;
        }
    }
    return orbits;
}

}  // namespace nilstrat

#endif
