#ifndef NILSTRAT_FIELD_HPP
#define NILSTRAT_FIELD_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace nilstrat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact rationals. cpp_rational keeps values in lowest terms with a
/// positive denominator.
struct RationalField {
    using value_type = Rational;

    static constexpr bool is_prime_field = false;

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long long v) const { return value_type(v); }
    value_type from_rational(const Rational& v) const { return v; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const {
        if (a == 0) fail(ErrorKind::singular, "division by zero");
        return value_type(1) / a;
    }
    bool is_zero(const value_type& a) const { return a.is_zero(); }

    std::string describe() const { return "rationals"; }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Integers modulo a prime p, with representatives in [0, p).
class PrimeField {
public:
    using value_type = std::uint64_t;

    static constexpr bool is_prime_field = true;
    /// Keeps products of two residues inside 64 bits.
    static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 31);

    PrimeField() = default;
    explicit PrimeField(std::uint64_t p) : m_p(p) {
        if (!is_prime(p) || p >= max_modulus) {
            fail(ErrorKind::invalid_argument, "modulus " + std::to_string(p) + " is not a supported prime");
        }
    }

    std::uint64_t modulus() const noexcept { return m_p; }

    value_type zero() const { return 0; }
    value_type one() const { return 1 % m_p; }
    value_type from_int(long long v) const {
        const long long p = static_cast<long long>(m_p);
        long long r = v % p;
        if (r < 0) r += p;
        return static_cast<value_type>(r);
    }
    value_type from_rational(const Rational& v) const {
        const BigInt p(m_p);
        BigInt num = boost::multiprecision::numerator(v) % p;
        BigInt den = boost::multiprecision::denominator(v) % p;
        if (num < 0) num += p;
        if (den == 0) fail(ErrorKind::domain_mismatch, "denominator divisible by the modulus");
        return mul(num.convert_to<value_type>(), inv(den.convert_to<value_type>()));
    }

    value_type add(value_type a, value_type b) const { return (a + b) % m_p; }
    value_type sub(value_type a, value_type b) const { return (a + m_p - b) % m_p; }
    value_type mul(value_type a, value_type b) const { return (a * b) % m_p; }
    value_type neg(value_type a) const { return (m_p - a) % m_p; }
    value_type pow(value_type a, std::uint64_t e) const {
        value_type result = one();
        while (e) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }
    value_type inv(value_type a) const {
        if (a == 0) fail(ErrorKind::singular, "division by zero");
        return pow(a, m_p - 2);
    }
    bool is_zero(value_type a) const { return a == 0; }

    std::string describe() const { return "F_" + std::to_string(m_p); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t m_p = 2;
};

}  // namespace nilstrat

#endif
