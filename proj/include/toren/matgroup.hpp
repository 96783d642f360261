#pragma once

#include <string>
#include <vector>

#include "toren/exactnum.hpp"

namespace toren {

/// Square matrix over a cyclotomic field, row-major. Immutable in spirit:
/// arithmetic returns new values.
class CycMatrix {
public:
    CycMatrix() = default;
    explicit CycMatrix(std::size_t n);
    static CycMatrix identity(std::size_t n, unsigned conductor = 1);

    std::size_t dim() const { return n_; }
    const CycNum& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    CycNum& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const std::vector<CycNum>& entries() const { return entries_; }

    CycMatrix operator*(const CycMatrix& rhs) const;
    CycMatrix scaled(const CycNum& c) const;
    CycNum det() const;
    CycMatrix inverse() const;

    bool is_identity() const;
    bool is_scalar() const;

    /// Smallest common conductor holding every entry.
    unsigned common_conductor() const;
    /// All entries re-represented at the given conductor.
    CycMatrix promoted(unsigned conductor) const;

    friend bool operator==(const CycMatrix& a, const CycMatrix& b);
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    std::vector<CycNum> entries_;
};

/// true iff (M - I)^n = 0.
bool is_unipotent(const CycMatrix& m);

/// Deterministic total order for deduplication; requires both matrices
/// normalized to one conductor.
bool matrix_less_same_conductor(const CycMatrix& a, const CycMatrix& b);

/// Names of the built-in groups: the finite-subgroup catalog of SL2 plus the
/// auxiliary worked-example groups.
struct GroupName {
    enum class Tag {
        cyclic,                    // order m, diag(zeta_m, zeta_m^-1)
        binary_dihedral,           // order 4m
        binary_tetrahedral,        // order 24
        binary_octahedral,         // order 48
        binary_icosahedral,        // order 120
        dihedral_cone_example,     // order 4m in GL2, diagonal + antidiagonal
        permutation_diag_example,  // the n! permutation matrices in GL_n
    };
    Tag tag = Tag::cyclic;
    unsigned param = 0;

    std::string str() const;
    static GroupName parse(const std::string& text);
    /// true for tags that take a positive parameter.
    bool parameterized() const;
};

/// Finite multiplicatively closed set of matrices sharing one conductor.
class FiniteMatGroup {
public:
    FiniteMatGroup() = default;
    FiniteMatGroup(std::size_t n, unsigned conductor, std::vector<CycMatrix> elements,
                   std::vector<CycMatrix> generators);

    std::size_t dim() const { return n_; }
    unsigned conductor() const { return conductor_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<CycMatrix>& elements() const { return elements_; }
    const std::vector<CycMatrix>& generators() const { return generators_; }
    bool contains(const CycMatrix& m) const;

private:
    std::size_t n_ = 0;
    unsigned conductor_ = 1;
    std::vector<CycMatrix> elements_;  // sorted, deduplicated
    std::vector<CycMatrix> generators_;
};

/// Breadth-first product closure of the generators. Throws if the closure
/// exceeds `cap` elements or a generator is singular.
FiniteMatGroup closure(const std::vector<CycMatrix>& generators, std::size_t cap = 10000);

/// The catalog group with its standard generators.
FiniteMatGroup named_group(const GroupName& name);

/// One representative per line {c*M : c nonzero}, canonicalized by dividing
/// by the first nonzero entry; sorted deterministically.
std::vector<CycMatrix> scalar_cone_points(const FiniteMatGroup& group);

/// Number of scalar matrices in the group.
std::size_t scalar_subgroup_order(const FiniteMatGroup& group);

}  // namespace toren
