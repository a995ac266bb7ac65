#ifndef NILSTRAT_REDUCED_HPP
#define NILSTRAT_REDUCED_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace nilstrat {

/// Element of Z^k with componentwise arithmetic. Z^k is reduced with
/// exactly k minimal primes, the coordinate kernels.
class ProductRingElem {
public:
    explicit ProductRingElem(std::vector<BigInt> coords) : m_coords(std::move(coords)) {
        if (m_coords.empty()) fail(ErrorKind::invalid_argument, "an element of Z^k needs k >= 1 coordinates");
    }

    static ProductRingElem zero(std::size_t k) { return ProductRingElem(std::vector<BigInt>(k)); }

    std::size_t arity() const noexcept { return m_coords.size(); }
    const std::vector<BigInt>& coords() const noexcept { return m_coords; }
    const BigInt& operator[](std::size_t i) const { return m_coords[i]; }

    bool is_zero() const {
        for (const auto& c : m_coords) {
            if (c != 0) return false;
        }
        return true;
    }

    /// Non-zero-divisor: no coordinate vanishes.
    bool is_regular() const {
        for (const auto& c : m_coords) {
            if (c == 0) return false;
        }
        return true;
    }

    bool is_zero_divisor() const { return !is_zero() && !is_regular(); }

    /// Indices of nonzero coordinates.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < m_coords.size(); ++i) {
            if (m_coords[i] != 0) out.push_back(i);
        }
        return out;
    }

    friend ProductRingElem operator+(const ProductRingElem& a, const ProductRingElem& b) {
        return combine(a, b, [](const BigInt& x, const BigInt& y) { return BigInt(x + y); });
    }
    friend ProductRingElem operator*(const ProductRingElem& a, const ProductRingElem& b) {
        return combine(a, b, [](const BigInt& x, const BigInt& y) { return BigInt(x * y); });
    }
    friend bool operator==(const ProductRingElem&, const ProductRingElem&) = default;

private:
    template <typename Op>
    static ProductRingElem combine(const ProductRingElem& a, const ProductRingElem& b, Op op) {
        if (a.arity() != b.arity()) {
            fail(ErrorKind::dimension_mismatch, "elements of Z^" + std::to_string(a.arity()) + " and Z^" +
                                                    std::to_string(b.arity()));
        }
        std::vector<BigInt> out(a.arity());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a.m_coords[i], b.m_coords[i]);
        return ProductRingElem(std::move(out));
    }

    std::vector<BigInt> m_coords;
};

/// s with s_i = 1 where r_i = 0 and s_i = 0 elsewhere, so r s = 0 and r + s
/// is regular.
inline ProductRingElem regular_complement(const ProductRingElem& r) {
    std::vector<BigInt> s(r.arity());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = (r[i] == 0) ? 1 : 0;
    return ProductRingElem(std::move(s));
}

}  // namespace nilstrat

#endif
