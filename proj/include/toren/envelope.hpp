#pragma once

#include <optional>
#include <string>

#include "toren/groebner.hpp"
#include "toren/matgroup.hpp"

namespace toren {

/// Dimension and degree of the variety cut out by an ideal, read from the
/// leading terms of its reduced Groebner basis. Requires a graded order.
VarietyProfile variety_profile(const Ideal& ideal);

enum class ConeStrategy { intersection, interpolation };

/// The homogeneous vanishing ideal of the scalar cone over a finite matrix
/// group: one line through the origin of matrix space per group element up
/// to scalars. Construction is self-checking: every generator is verified
/// homogeneous and vanishing on every line representative, and the Hilbert
/// profile must come out as (dimension 1, degree = number of lines).
struct ConeIdeal {
    FiniteMatGroup group;
    std::vector<CycMatrix> line_reps;
    Ideal ideal;  // generators normalized to the reduced Groebner basis
    std::string construction_log;

    ConeIdeal with_order(const MonomialOrder& order) const;
};

ConeIdeal cone_ideal(const FiniteMatGroup& group, ConeStrategy strategy,
                     const MonomialOrder& order = MonomialOrder::grlex());

/// Result of the truncated-ideal degree-bound search on a scalar cone.
struct EnvelopeBoundResult {
    unsigned d = 0;               // minimal truncation degree whose radical recovers the ideal
    unsigned max_gb_degree = 0;   // max total degree in the reduced basis
    std::size_t gb_size = 0;
    VarietyProfile profile;       // of the cone
    std::size_t num_lines = 0;
    std::size_t group_order = 0;
};

/// Degree-bound search for the scalar cone of a finite subgroup of SL2:
/// computes the cone ideal, its reduced Groebner basis B, and the minimal d
/// such that the radical of <p in B : deg p <= d> recovers the full ideal
/// (per-generator Rabinowitsch tests). Scans every d up to max deg B and
/// asserts the truncation test is monotone. Throws on input that is not a
/// finite subgroup of SL2 in dimension 2.
EnvelopeBoundResult degree_bound_search(const FiniteMatGroup& group,
                                        const MonomialOrder& order = MonomialOrder::grlex(),
                                        ConeStrategy strategy = ConeStrategy::interpolation);
/// Same search on an already-built cone (uses the cone ideal's order).
EnvelopeBoundResult degree_bound_search(const ConeIdeal& cone);

/// true iff every element of closure(generators) is a zero of every
/// generator of the candidate envelope ideal.
bool check_envelope_membership(const std::vector<CycMatrix>& generators, const Ideal& envelope,
                               std::size_t cap = 10000);

/// Worked example report: exact (dimension, degree) data for the small
/// parameterized families (roots of unity, the triangular power group, the
/// dihedral point configuration, unions of permutation-patterned planes).
struct WorkedExample {
    std::string name;
    unsigned param = 0;
    VarietyProfile group_profile;
    std::optional<VarietyProfile> envelope_profile;
};

/// Runs one named example ("roots-of-unity", "torus-example",
/// "dihedral-example", "permutation-diag") at the given parameter.
/// Parameters above the desk-scale caps (12, 6, 6, 4) are rejected.
WorkedExample run_example(const std::string& name, unsigned param);

/// No name: the full desk-scale sweep. Name without parameter: one default
/// instance of the family.
std::vector<WorkedExample> example_degrees(const std::optional<std::string>& name = {},
                                           std::optional<unsigned> param = {});

/// Vanishing ideal of the union of coordinate planes spanned by the
/// permutation-matrix patterns in dimension n: an exact monomial-ideal
/// intersection (the fast route; cross-checked against ideal_intersect in
/// the tests).
Ideal permutation_plane_union_ideal(std::size_t n);

}  // namespace toren
