#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toren/error.hpp"

namespace toren {

/// Exact rational number, always in canonical form (gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1). Backed by GMP.
using Rational = mpq_class;

/// Arbitrary-precision integer.
using BigInt = mpz_class;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

unsigned euler_phi(unsigned n);
unsigned long lcm_u(unsigned long a, unsigned long b);
std::vector<unsigned long> sorted_divisors(unsigned long n);

/// Coefficients of the N-th cyclotomic polynomial, low degree first,
/// monic of degree euler_phi(N). Rejects N = 0.
std::vector<Rational> cyclotomic_polynomial(unsigned n);

namespace detail {
struct CycContext;
}

/// An element of the cyclotomic field Q(zeta_N), stored on the power basis
/// 1, zeta, ..., zeta^(phi(N)-1) reduced mod the N-th cyclotomic polynomial.
/// Values are immutable; all arithmetic is exact. Mixed-conductor operands
/// are promoted to the lcm conductor automatically.
class CycNum {
public:
    CycNum();  // zero in Q = Q(zeta_1)
    CycNum(long value);
    CycNum(const Rational& value);

    static CycNum from_rational(const Rational& value, unsigned conductor);
    /// zeta_N^power (power may be negative).
    static CycNum root_of_unity(unsigned conductor, long power = 1);

    unsigned conductor() const;
    /// Power-basis coefficients; size is exactly euler_phi(conductor()).
    const std::vector<Rational>& coeffs() const;

    bool is_zero() const;
    bool is_rational() const;
    /// The value as a Rational; throws unless is_rational().
    Rational rational_value() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic polynomial. Throws on zero.
    CycNum inverse() const;
    CycNum pow(long exponent) const;

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

private:
    std::shared_ptr<const detail::CycContext> ctx_;
    std::vector<Rational> coeffs_;

    explicit CycNum(std::shared_ptr<const detail::CycContext> ctx, std::vector<Rational> coeffs);
    friend CycNum embed_into(const CycNum&, unsigned);
    friend int compare_same_conductor(const CycNum&, const CycNum&);
};

/// Re-represent a with conductor target (zeta_N -> zeta_target^(target/N)).
/// Throws unless conductor(a) divides target.
CycNum embed_into(const CycNum& a, unsigned target);

/// Total order on elements sharing one conductor (coefficient-lexicographic);
/// used as a deduplication key. Throws on mixed conductors.
int compare_same_conductor(const CycNum& a, const CycNum& b);

/// Multiplicative order of a if a is a root of unity, otherwise nullopt.
std::optional<unsigned long> root_of_unity_order(const CycNum& a);

}  // namespace toren
