#ifndef NILSTRAT_PARTITION_HPP
#define NILSTRAT_PARTITION_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace nilstrat {

/*
 * Integer partition stored in canonical (non-increasing) order.
 *
 * A partition of n doubles as the Jordan type of an n x n nilpotent matrix:
 * parts are block lengths. Reads past the last part return 0, so
 * `part(i)` is defined for every i.
 */
class Partition {
public:
    Partition() = default;

    /// Normalizes arbitrary order; throws invalid-part on a value <= 0.
    explicit Partition(std::span<const long long> values) {
        m_parts.reserve(values.size());
        for (long long v : values) {
            if (v <= 0) {
                fail(ErrorKind::invalid_part, "part " + std::to_string(v) + " is not positive");
            }
            m_parts.push_back(static_cast<int>(v));
            m_size += static_cast<int>(v);
        }
        std::sort(m_parts.begin(), m_parts.end(), std::greater<>());
    }

    Partition(std::initializer_list<long long> values)
        : Partition(std::span<const long long>(values.begin(), values.size())) {}

    /// Number partitioned (sum of parts).
    int size() const noexcept { return m_size; }
    /// Number of parts.
    int length() const noexcept { return static_cast<int>(m_parts.size()); }
    bool empty() const noexcept { return m_parts.empty(); }

    /// Zero-based; 0 beyond the last part.
    int part(std::size_t i) const noexcept { return i < m_parts.size() ? m_parts[i] : 0; }
    const std::vector<int>& parts() const noexcept { return m_parts; }

    /// Prefix sums s_1..s_n with s_k = part(0) + ... + part(k-1), padded to size().
    std::vector<int> prefix_sums() const {
        std::vector<int> sums(static_cast<std::size_t>(m_size));
        int acc = 0;
        for (int k = 0; k < m_size; ++k) {
            acc += part(static_cast<std::size_t>(k));
            sums[static_cast<std::size_t>(k)] = acc;
        }
        return sums;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < m_parts.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(m_parts[i]);
        }
        return out + "]";
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Trusted constructor for already-sorted positive parts.
    static Partition from_sorted(std::vector<int> parts) {
        Partition p;
        for (int v : parts) p.m_size += v;
        p.m_parts = std::move(parts);
        return p;
    }

private:
    std::vector<int> m_parts;
    int m_size = 0;
};

inline Partition make_partition(std::span<const long long> values) { return Partition(values); }

/// Total order used for map keys and deterministic output; unrelated to dominance.
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                            b.parts().begin(), b.parts().end(),
                                            std::greater<>());
    }
};

inline Partition conjugate(const Partition& mu) {
    std::vector<int> out(static_cast<std::size_t>(mu.part(0)), 0);
    for (int p : mu.parts()) {
        for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
    }
    return Partition::from_sorted(std::move(out));
}

namespace detail {

inline void require_same_size(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) {
        fail(ErrorKind::incomparable_sizes,
             "partitions of " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

inline Partition from_prefix_sums(const std::vector<int>& sums) {
    std::vector<int> parts;
    int prev = 0;
    for (int s : sums) {
        if (s == prev) break;
        parts.push_back(s - prev);
        prev = s;
    }
    return Partition::from_sorted(std::move(parts));
}

}  // namespace detail

/// Dominance order: true iff mu <= nu, i.e. every prefix sum of mu is at
/// most the matching prefix sum of nu.
inline bool dominance_leq(const Partition& mu, const Partition& nu) {
    detail::require_same_size(mu, nu);
    int a = 0;
    int b = 0;
    for (std::size_t k = 0; k < static_cast<std::size_t>(mu.length()); ++k) {
        a += mu.part(k);
        b += nu.part(k);
        if (a > b) return false;
    }
    return true;
}

/// Greatest lower bound. Pointwise minima of prefix sums stay concave, so
/// first differences are already non-increasing.
inline Partition meet(const Partition& mu, const Partition& nu) {
    detail::require_same_size(mu, nu);
    auto a = mu.prefix_sums();
    const auto b = nu.prefix_sums();
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = std::min(a[k], b[k]);
    return detail::from_prefix_sums(a);
}

/// Least upper bound, via conjugation of the meet of conjugates.
inline Partition join(const Partition& mu, const Partition& nu) {
    detail::require_same_size(mu, nu);
    return conjugate(meet(conjugate(mu), conjugate(nu)));
}

/// The minimum of `set` under dominance if it exists (the meet is a member),
/// otherwise nullopt.
inline std::optional<Partition> minimum(std::span<const Partition> set) {
    if (set.empty()) fail(ErrorKind::empty_input, "minimum of an empty set of partitions");
    Partition m = set.front();
    for (const auto& p : set.subspan(1)) m = meet(m, p);
    if (std::find(set.begin(), set.end(), m) == set.end()) return std::nullopt;
    return m;
}

/// Multiset union of parts.
inline Partition direct_sum_type(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<>());
    return Partition::from_sorted(std::move(parts));
}

/// All partitions of n in reverse lexicographic order, starting from [n].
inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur{n};
    while (true) {
        out.push_back(Partition::from_sorted(cur));
        // Strip trailing ones, decrement the last part > 1, refill greedily.
        int ones = 0;
        while (!cur.empty() && cur.back() == 1) {
            cur.pop_back();
            ++ones;
        }
        if (cur.empty()) break;
        const int v = --cur.back();
        int rest = ones + 1;
        while (rest > 0) {
            const int take = std::min(v, rest);
            cur.push_back(take);
            rest -= take;
        }
    }
    return out;
}

}  // namespace nilstrat

#endif
