#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toren/exactnum.hpp"

namespace toren {

/// Dense exponent vector with cached total degree.
struct Monomial {
    std::vector<unsigned> exps;
    unsigned total = 0;

    Monomial() = default;
    explicit Monomial(std::vector<unsigned> e);

    static Monomial one(std::size_t num_vars);
    static Monomial var(std::size_t num_vars, std::size_t index, unsigned exp = 1);

    std::size_t num_vars() const { return exps.size(); }
    bool is_one() const { return total == 0; }
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& rhs) const;
    /// this / m; caller guarantees m.divides(*this).
    Monomial quotient(const Monomial& m) const;
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

enum class OrderKind { graded_lex, graded_reverse_lex, lex, elimination };

/// Monomial order. The elimination order compares a leading block of
/// variables graded-lexicographically first, then the remaining block; any
/// monomial touching the leading block beats every monomial that does not.
struct MonomialOrder {
    OrderKind kind = OrderKind::graded_lex;
    std::size_t block = 0;  // leading-block size, elimination only

    static MonomialOrder grlex() { return {OrderKind::graded_lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::graded_reverse_lex, 0}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder elimination(std::size_t block) { return {OrderKind::elimination, block}; }

    bool less(const Monomial& a, const Monomial& b) const;
    bool is_graded() const {
        return kind == OrderKind::graded_lex || kind == OrderKind::graded_reverse_lex;
    }
    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct Term {
    Monomial mono;
    CycNum coeff;
};

/// Multivariate polynomial over a cyclotomic field. Terms are nonzero and
/// kept sorted descending under graded lex, the canonical storage order;
/// order-sensitive operations take the active MonomialOrder explicitly.
class Poly {
public:
    Poly() = default;
    static Poly zero(std::size_t num_vars);
    static Poly constant(std::size_t num_vars, CycNum c);
    static Poly variable(std::size_t num_vars, std::size_t index, unsigned exp = 1);
    /// Collects like terms, drops zeros, sorts canonically.
    static Poly from_terms(std::size_t num_vars, std::vector<Term> terms);

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Max total degree of a term; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    const Term& leading_term(const MonomialOrder& order) const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly scaled(const CycNum& c) const;
    Poly times_monomial(const CycNum& c, const Monomial& m) const;
    /// Monic w.r.t. the given order; zero stays zero.
    Poly monic(const MonomialOrder& order) const;

    CycNum evaluate(std::span<const CycNum> point) const;

    /// Same polynomial with `front` fresh variables prepended and `back`
    /// appended (exponent zero everywhere).
    Poly with_variables(std::size_t front, std::size_t back) const;
    /// Drops the first `front` variables; every dropped exponent must be 0.
    Poly drop_leading_variables(std::size_t front) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    std::size_t num_vars_ = 0;
    std::vector<Term> terms_;
};

/// (dimension, degree) of a variety read from Hilbert-series data of a
/// leading-term monomial ideal.
struct VarietyProfile {
    std::size_t dimension = 0;
    BigInt degree = 1;
    friend bool operator==(const VarietyProfile&, const VarietyProfile&) = default;
};

/// Dimension and degree of the variety of a leading-term ideal, computed
/// exactly from the Hilbert series of the quotient ring. The input must be
/// the leading terms of a reduced Groebner basis under a graded order.
/// Throws on num_vars = 0 and on the unit ideal (empty variety).
VarietyProfile hilbert_profile(const std::vector<Monomial>& leading_terms, std::size_t num_vars);

}  // namespace toren
