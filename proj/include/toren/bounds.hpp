#pragma once

#include <optional>
#include <vector>

#include "toren/exactnum.hpp"

namespace toren {

/// Jordan-constant bound after Schur: (sqrt(8n)+1)^(2n^2) - (sqrt(8n)-1)^(2n^2),
/// evaluated by binomial expansion in Z[sqrt(8n)]. The expression is an
/// integer exactly when 8n is a perfect square; otherwise `value` is the
/// ceiling of the exact algebraic value and `exact` is false (a ceiling of an
/// upper bound is still an upper bound).
struct SchurBound {
    BigInt value;
    bool exact = true;
};
SchurBound schur_bound(unsigned n);

/// Largest finite abelian subgroup order in GL_n(Z): exactly known for
/// n <= 3 (2, 6, 12), and bounded above by 2 * 3^(floor(n^2/4)) in general.
struct AbelianBound {
    std::optional<BigInt> exact;
    BigInt upper;
    /// exact value when known, else the upper bound.
    const BigInt& best() const { return exact ? *exact : upper; }
};
AbelianBound abelian_bound(unsigned n);

/// Degree bound for a connected unipotent subgroup: prod_{k=1}^{n-1} k!.
BigInt unipotent_bound(unsigned n);

/// Degree bound for a toric envelope of a reductive subgroup:
/// schur_bound(n) * abelian_bound(n-1) * n^(n^2+n-5). Requires n >= 2.
BigInt reductive_bound(unsigned n);

/// Degree bound for a product G0 * U: D1 * D2 * 2^(n(n-1)/2).
BigInt product_bound(const BigInt& d1, const BigInt& d2, unsigned n);

/// Same with the precise quadratic-equation count for a block-diagonal
/// reductive part with the given block sizes:
/// exponent n(n-1)/2 - sum_i b_i(b_i-1)/2. Blocks must sum to n.
BigInt product_bound_blocks(const BigInt& d1, const BigInt& d2, unsigned n,
                            const std::vector<unsigned>& blocks);

/// Full composed bound:
/// schur * abelian(n-1) * n^(n^2+n-5) * 2^(n(n-1)/2) * prod k!. Requires n >= 2.
BigInt tight_bound(unsigned n);

/// Headline bound: 1, 6, 360 for n = 1, 2, 3 and (4n)^(3n^2) beyond.
BigInt headline_bound(unsigned n);

/// n!, the degree of the permutation/diagonal lower-bound family.
BigInt factorial_lower_bound(unsigned n);

/// Everything above for one n, plus consistency flags.
struct BoundReport {
    unsigned n = 0;
    BigInt schur;
    bool schur_exact = true;
    std::optional<BigInt> abelian_exact;
    BigInt abelian_upper;
    BigInt unipotent;
    std::optional<BigInt> reductive;      // n >= 2
    BigInt product_factor;                // 2^(n(n-1)/2)
    std::optional<BigInt> tight;          // n >= 2
    BigInt headline;
    BigInt factorial;
    /// tight <= headline where tight is defined; false for n = 2, 3 where the
    /// headline comes from the sharper special-case analysis. Reported, never
    /// silently patched.
    bool tight_le_headline = true;
};
BoundReport bound_report(unsigned n);

}  // namespace toren
