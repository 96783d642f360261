#include "toren/matgroup.hpp"

#include <algorithm>
#include <set>

namespace toren {

CycMatrix::CycMatrix(std::size_t n) : n_(n), entries_(n * n) {}

CycMatrix CycMatrix::identity(std::size_t n, unsigned conductor) {
    CycMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = CycNum::from_rational(i == j ? 1 : 0, conductor);
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    if (n_ != rhs.n_) throw Error("matrix dimension mismatch");
    CycMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            CycNum acc = at(i, 0) * rhs.at(0, j);
            for (std::size_t k = 1; k < n_; ++k) acc += at(i, k) * rhs.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

CycMatrix CycMatrix::scaled(const CycNum& c) const {
    CycMatrix r(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
    return r;
}

CycNum CycMatrix::det() const {
    // Gaussian elimination over the field, tracking row-swap sign.
    CycMatrix a = *this;
    CycNum result(1);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n_) return CycNum(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            result = -result;
        }
        result *= a.at(col, col);
        CycNum inv = a.at(col, col).inverse();
        for (std::size_t row = col + 1; row < n_; ++row) {
            if (a.at(row, col).is_zero()) continue;
            CycNum f = a.at(row, col) * inv;
            for (std::size_t j = col; j < n_; ++j) a.at(row, j) -= f * a.at(col, j);
        }
    }
    return result;
}

CycMatrix CycMatrix::inverse() const {
    CycMatrix a = *this;
    CycMatrix inv = CycMatrix::identity(n_, common_conductor());
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n_) throw Error("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        CycNum d = a.at(col, col).inverse();
        for (std::size_t j = 0; j < n_; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (std::size_t row = 0; row < n_; ++row) {
            if (row == col || a.at(row, col).is_zero()) continue;
            CycNum f = a.at(row, col);
            for (std::size_t j = 0; j < n_; ++j) {
                a.at(row, j) -= f * a.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool CycMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (at(i, j) != CycNum(i == j ? 1 : 0)) return false;
    return true;
}

bool CycMatrix::is_scalar() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (i != j && !at(i, j).is_zero()) return false;
            if (i == j && at(i, j) != at(0, 0)) return false;
        }
    return true;
}

unsigned CycMatrix::common_conductor() const {
    unsigned long l = 1;
    for (const CycNum& e : entries_) l = lcm_u(l, e.conductor());
    return static_cast<unsigned>(l);
}

CycMatrix CycMatrix::promoted(unsigned conductor) const {
    CycMatrix r(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = embed_into(entries_[i], conductor);
    return r;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (a.entries_[i] != b.entries_[i]) return false;
    return true;
}

bool is_unipotent(const CycMatrix& m) {
    const std::size_t n = m.dim();
    CycMatrix d = m;
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) -= CycNum(1);
    CycMatrix power = d;
    for (std::size_t k = 1; k < n; ++k) power = power * d;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!power.at(i, j).is_zero()) return false;
    return true;
}

bool matrix_less_same_conductor(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        int c = compare_same_conductor(a.entries()[i], b.entries()[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Group closure
// ---------------------------------------------------------------------------

FiniteMatGroup::FiniteMatGroup(std::size_t n, unsigned conductor, std::vector<CycMatrix> elements,
                               std::vector<CycMatrix> generators)
    : n_(n), conductor_(conductor), elements_(std::move(elements)),
      generators_(std::move(generators)) {}

bool FiniteMatGroup::contains(const CycMatrix& m) const {
    if (m.dim() != n_) return false;
    if (conductor_ % lcm_u(1, m.common_conductor()) == 0)
        return std::binary_search(elements_.begin(), elements_.end(), m.promoted(conductor_),
                                  matrix_less_same_conductor);
    // probe conductor does not divide ours: fall back to value comparison
    return std::find(elements_.begin(), elements_.end(), m) != elements_.end();
}

FiniteMatGroup closure(const std::vector<CycMatrix>& generators, std::size_t cap) {
    if (generators.empty()) throw Error("closure needs at least one generator");
    const std::size_t n = generators.front().dim();
    unsigned long cond = 1;
    for (const CycMatrix& g : generators) {
        if (g.dim() != n) throw Error("closure: generators of mixed dimension");
        cond = lcm_u(cond, g.common_conductor());
    }
    const unsigned conductor = static_cast<unsigned>(cond);
    std::vector<CycMatrix> gens;
    for (const CycMatrix& g : generators) {
        CycMatrix p = g.promoted(conductor);
        if (p.det().is_zero()) throw Error("closure: generator is not invertible");
        gens.push_back(std::move(p));
    }

    std::set<CycMatrix, bool (*)(const CycMatrix&, const CycMatrix&)> elems(
        matrix_less_same_conductor);
    std::vector<CycMatrix> frontier{CycMatrix::identity(n, conductor)};
    elems.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<CycMatrix> next;
        for (const CycMatrix& a : frontier)
            for (const CycMatrix& g : gens) {
                CycMatrix m = a * g;
                if (elems.insert(m).second) {
                    if (elems.size() > cap)
                        throw Error("closure: not finite within cap " + std::to_string(cap));
                    next.push_back(std::move(m));
                }
            }
        frontier = std::move(next);
    }
    return FiniteMatGroup(n, conductor, std::vector<CycMatrix>(elems.begin(), elems.end()), gens);
}

// ---------------------------------------------------------------------------
// Named catalog
// ---------------------------------------------------------------------------

namespace {

CycMatrix mat2(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) {
    CycMatrix m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

std::vector<CycMatrix> binary_tetrahedral_generators() {
    // quaternion units i, j and the order-3 unit (-1+i+j+k)/2, written over
    // Q(zeta_8) via a+bi -> diag embedding of SU(2)
    CycNum i = CycNum::root_of_unity(8, 2);
    CycNum zero(0), one(1), half(Rational(1, 2));
    CycMatrix qi = mat2(i, zero, zero, -i);
    CycMatrix qj = mat2(zero, one, -one, zero);
    CycMatrix omega = mat2((i - one) * half, (i + one) * half, (i - one) * half, -(i + one) * half);
    return {qi, qj, omega};
}

std::vector<CycMatrix> binary_octahedral_generators() {
    auto gens = binary_tetrahedral_generators();
    CycNum z8 = CycNum::root_of_unity(8);
    gens.push_back(mat2(z8, CycNum(0), CycNum(0), z8.pow(-1)));
    return gens;
}

std::vector<CycMatrix> binary_icosahedral_generators() {
    // order-10 and order-4 rotations over Q(zeta_5); sqrt(5) = z - z^2 - z^3 + z^4
    CycNum z = CycNum::root_of_unity(5);
    CycNum inv_sqrt5 = (z - z.pow(2) - z.pow(3) + z.pow(4)).inverse();
    CycMatrix s = mat2(z.pow(3), CycNum(0), CycNum(0), z.pow(2));
    CycMatrix t = mat2((z.pow(4) - z) * inv_sqrt5, (z.pow(2) - z.pow(3)) * inv_sqrt5,
                       (z.pow(2) - z.pow(3)) * inv_sqrt5, (z - z.pow(4)) * inv_sqrt5);
    return {s, t};
}

}  // namespace

std::string GroupName::str() const {
    switch (tag) {
        case Tag::cyclic: return "cyclic-" + std::to_string(param);
        case Tag::binary_dihedral: return "binary-dihedral-" + std::to_string(param);
        case Tag::binary_tetrahedral: return "binary-tetrahedral";
        case Tag::binary_octahedral: return "binary-octahedral";
        case Tag::binary_icosahedral: return "binary-icosahedral";
        case Tag::dihedral_cone_example: return "dihedral-cone-example-" + std::to_string(param);
        case Tag::permutation_diag_example:
            return "permutation-diag-example-" + std::to_string(param);
    }
    throw Error("unknown group tag");
}

bool GroupName::parameterized() const {
    return tag == Tag::cyclic || tag == Tag::binary_dihedral ||
           tag == Tag::dihedral_cone_example || tag == Tag::permutation_diag_example;
}

GroupName GroupName::parse(const std::string& text) {
    auto split_param = [](const std::string& s, const std::string& prefix,
                          GroupName::Tag tag) -> std::optional<GroupName> {
        if (s.rfind(prefix + "-", 0) != 0) return std::nullopt;
        std::string tail = s.substr(prefix.size() + 1);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        unsigned long p = std::stoul(tail);
        if (p == 0) throw Error("group parameter must be positive in '" + s + "'");
        return GroupName{tag, static_cast<unsigned>(p)};
    };
    if (text == "binary-tetrahedral") return {Tag::binary_tetrahedral, 0};
    if (text == "binary-octahedral") return {Tag::binary_octahedral, 0};
    if (text == "binary-icosahedral") return {Tag::binary_icosahedral, 0};
    for (auto [prefix, tag] :
         {std::pair<const char*, Tag>{"cyclic", Tag::cyclic},
          {"binary-dihedral", Tag::binary_dihedral},
          {"dihedral-cone-example", Tag::dihedral_cone_example},
          {"permutation-diag-example", Tag::permutation_diag_example},
          {"permutation-diag", Tag::permutation_diag_example}}) {
        if (auto r = split_param(text, prefix, tag)) return *r;
    }
    throw Error("unknown group name '" + text + "'");
}

FiniteMatGroup named_group(const GroupName& name) {
    using Tag = GroupName::Tag;
    if (name.parameterized() && name.param == 0)
        throw Error("group '" + name.str() + "' needs a positive parameter");
    switch (name.tag) {
        case Tag::cyclic: {
            CycNum z = CycNum::root_of_unity(name.param);
            return closure({mat2(z, CycNum(0), CycNum(0), z.pow(-1))});
        }
        case Tag::binary_dihedral: {
            CycNum z = CycNum::root_of_unity(2 * name.param);
            CycMatrix a = mat2(z, CycNum(0), CycNum(0), z.pow(-1));
            CycMatrix b = mat2(CycNum(0), CycNum(1), CycNum(-1), CycNum(0));
            return closure({a, b});
        }
        case Tag::binary_tetrahedral: return closure(binary_tetrahedral_generators());
        case Tag::binary_octahedral: return closure(binary_octahedral_generators());
        case Tag::binary_icosahedral: return closure(binary_icosahedral_generators());
        case Tag::dihedral_cone_example: {
            // 2m diagonal and 2m antidiagonal points, eps of order 2m
            CycNum z = CycNum::root_of_unity(2 * name.param);
            CycMatrix a = mat2(z, CycNum(0), CycNum(0), z.pow(-1));
            CycMatrix swap = mat2(CycNum(0), CycNum(1), CycNum(1), CycNum(0));
            return closure({a, swap});
        }
        case Tag::permutation_diag_example: {
            const std::size_t n = name.param;
            if (n < 2) {
                return closure({CycMatrix::identity(1)});
            }
            CycMatrix transposition = CycMatrix::identity(n);
            std::swap(transposition.at(0, 0), transposition.at(0, 1));
            std::swap(transposition.at(1, 0), transposition.at(1, 1));
            CycMatrix cycle(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    cycle.at(i, j) = CycNum((i == (j + 1) % n) ? 1 : 0);
            return closure({transposition, cycle});
        }
    }
    throw Error("unknown group tag");
}

std::vector<CycMatrix> scalar_cone_points(const FiniteMatGroup& group) {
    std::set<CycMatrix, bool (*)(const CycMatrix&, const CycMatrix&)> reps(
        matrix_less_same_conductor);
    for (const CycMatrix& m : group.elements()) {
        const CycNum* first_nonzero = nullptr;
        for (const CycNum& e : m.entries())
            if (!e.is_zero()) {
                first_nonzero = &e;
                break;
            }
        if (!first_nonzero) throw Error("zero matrix in group");
        reps.insert(m.scaled(first_nonzero->inverse()));
    }
    return {reps.begin(), reps.end()};
}

std::size_t scalar_subgroup_order(const FiniteMatGroup& group) {
    return static_cast<std::size_t>(
        std::count_if(group.elements().begin(), group.elements().end(),
                      [](const CycMatrix& m) { return m.is_scalar(); }));
}

}  // namespace toren
