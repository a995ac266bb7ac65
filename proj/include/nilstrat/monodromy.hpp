#ifndef NILSTRAT_MONODROMY_HPP
#define NILSTRAT_MONODROMY_HPP

#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "jordan.hpp"
#include "matrix.hpp"
#include "partition.hpp"

namespace nilstrat {

/*
 * Configuration of one tame block: the fixed type tau (dimension and the
 * Jordan type of its monodromy) together with how many twisted copies
 * induction contributes.
 */
struct TameBlockSpec {
    std::string label;
    int tau_dim = 1;
    Partition tau_type{1};
    int mult = 1;

    void validate() const {
        if (tau_dim < 1) fail(ErrorKind::invalid_argument, "tau_dim must be positive in block '" + label + "'");
        if (mult < 1) fail(ErrorKind::invalid_argument, "mult must be positive in block '" + label + "'");
        if (tau_type.size() != tau_dim) {
            fail(ErrorKind::size_mismatch, "tau_type " + tau_type.to_string() + " is not a partition of " +
                                               std::to_string(tau_dim) + " in block '" + label + "'");
        }
    }

    /// Output dimension contributed by a partition of r.
    int output_size(int r) const { return mult * tau_dim * r; }

    friend bool operator==(const TameBlockSpec&, const TameBlockSpec&) = default;
};

/// The one-dimensional block with trivial monodromy and a single copy.
inline TameBlockSpec trivial_block(std::string label = "trivial") {
    return TameBlockSpec{std::move(label), 1, Partition{1}, 1};
}

namespace detail {

inline void require_nonempty(const Partition& a, const char* name) {
    if (a.empty()) fail(ErrorKind::empty_input, std::string(name) + " must be a partition of a positive integer");
}

}  // namespace detail

/// Jordan type of the Kronecker sum N_alpha (x) I + I (x) N_beta, computed
/// from the explicit matrix. This is the defining route for tensor_type.
inline Partition tensor_type_by_matrix(const Partition& alpha, const Partition& beta) {
    detail::require_nonempty(alpha, "alpha");
    detail::require_nonempty(beta, "beta");
    const auto a = static_cast<std::size_t>(alpha.size());
    const auto b = static_cast<std::size_t>(beta.size());
    const auto left = kron(jordan_matrix(alpha), RationalMatrix::identity(b));
    const auto right = kron(RationalMatrix::identity(a), jordan_matrix(beta));
    return jordan_type(mat_add(left, right));
}

/// Jordan type of the Kronecker sum by the characteristic-zero block rule:
/// J_s and J_t contribute blocks s+t-1, s+t-3, ..., |s-t|+1. Agreement with
/// tensor_type_by_matrix is checked exhaustively in the test suite.
inline Partition tensor_type(const Partition& alpha, const Partition& beta) {
    detail::require_nonempty(alpha, "alpha");
    detail::require_nonempty(beta, "beta");
    std::vector<long long> parts;
    for (int s : alpha.parts()) {
        for (int t : beta.parts()) {
            const int low = std::abs(s - t) + 1;
            for (int len = s + t - 1; len >= low; len -= 2) parts.push_back(len);
        }
    }
    return Partition(parts);
}

/// mult-fold direct sum of alpha with itself.
inline Partition induced_type(const Partition& alpha, int mult) {
    if (mult < 1) fail(ErrorKind::invalid_argument, "induction multiplicity must be positive, got " + std::to_string(mult));
    std::vector<int> parts;
    parts.reserve(alpha.parts().size() * static_cast<std::size_t>(mult));
    for (int p : alpha.parts()) parts.insert(parts.end(), static_cast<std::size_t>(mult), p);
    return Partition::from_sorted(std::move(parts));
}

struct BlockInput {
    TameBlockSpec spec;
    Partition alpha;
};

/// The composite type function: direct sum over blocks of the induced
/// tensor type. Monotone in each alpha under dominance.
inline Partition total_type(std::span<const BlockInput> blocks) {
    if (blocks.empty()) fail(ErrorKind::empty_input, "total_type needs at least one block");
    Partition total;
    for (const auto& block : blocks) {
        block.spec.validate();
        detail::require_nonempty(block.alpha, "alpha");
        total = direct_sum_type(total, induced_type(tensor_type(block.alpha, block.spec.tau_type), block.spec.mult));
    }
    return total;
}

}  // namespace nilstrat

#endif
