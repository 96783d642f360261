#pragma once

#include <memory>

#include "toren/multipoly.hpp"

namespace toren {

/// Finitely generated ideal with a monomial order and a write-once cached
/// reduced Groebner basis. Copies share the cache.
class Ideal {
public:
    Ideal() = default;
    Ideal(std::size_t num_vars, std::vector<Poly> generators,
          MonomialOrder order = MonomialOrder::grlex());

    std::size_t num_vars() const { return num_vars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Poly>& generators() const { return generators_; }

    /// The reduced Groebner basis: monic, fully inter-reduced, sorted by
    /// ascending leading term. Computed once per Ideal value and cached;
    /// safe under concurrent readers.
    const std::vector<Poly>& groebner_basis() const;

    /// Same generators under a different order (fresh cache).
    Ideal with_order(const MonomialOrder& order) const;

private:
    std::size_t num_vars_ = 0;
    MonomialOrder order_ = MonomialOrder::grlex();
    std::vector<Poly> generators_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Remainder of multivariate division of p by the given basis: no term of
/// the result is divisible by any basis leading term, and p - result lies in
/// the ideal generated by the basis.
Poly reduce(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order);

/// Reduced Groebner basis of I (convenience for I.groebner_basis()).
const std::vector<Poly>& groebner_basis(const Ideal& ideal);

/// f in I, decided by normal form against the reduced basis.
bool ideal_member(const Poly& f, const Ideal& ideal);

/// f in radical(I), by the Rabinowitsch trick: 1 in I + <1 - t*f> in a ring
/// extended by one fresh variable.
bool radical_member(const Poly& f, const Ideal& ideal);

/// I cap J via elimination of a fresh leading variable t from t*I + (1-t)*J.
Ideal ideal_intersect(const Ideal& lhs, const Ideal& rhs);

/// Exact equality of ideals, via canonical reduced bases. Computed under
/// lhs's order for both sides.
bool ideal_equal(const Ideal& lhs, const Ideal& rhs);

/// Generators of I intersected with the subring omitting the first
/// `lead_vars` variables; result lives in the remaining variables.
Ideal eliminate(const Ideal& ideal, std::size_t lead_vars);

}  // namespace toren
