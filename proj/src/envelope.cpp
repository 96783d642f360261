#include "toren/envelope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace toren {

VarietyProfile variety_profile(const Ideal& ideal) {
    if (!ideal.order().is_graded())
        throw Error("variety_profile needs a graded monomial order");
    std::vector<Monomial> lts;
    for (const Poly& p : ideal.groebner_basis())
        lts.push_back(p.leading_term(ideal.order()).mono);
    return hilbert_profile(lts, ideal.num_vars());
}

namespace {

// Flatten a matrix into a point of C^(n^2), row-major, promoted to one conductor.
std::vector<CycNum> matrix_point(const CycMatrix& m, unsigned conductor) {
    std::vector<CycNum> pt;
    pt.reserve(m.dim() * m.dim());
    for (const CycNum& e : m.entries()) pt.push_back(embed_into(e, conductor));
    return pt;
}

// All monomials of total degree exactly d in nv variables, descending grlex.
std::vector<Monomial> monomials_of_degree(std::size_t nv, unsigned d) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(nv, 0);
    // recursive enumeration without recursion: odometer over compositions
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned rest) {
        if (i + 1 == nv) {
            e[i] = rest;
            out.emplace_back(e);
            return;
        }
        for (unsigned k = rest + 1; k-- > 0;) {
            e[i] = k;
            rec(i + 1, rest - k);
        }
    };
    if (nv == 0) throw Error("no variables");
    rec(0, d);
    return out;
}

// Reduced row echelon form over the cyclotomic field; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<CycNum>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        CycNum inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            CycNum f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Vanishing ideal of the single line spanned by a nonzero point: the span of
// the 2x2 minors pairing coordinates with the point's values.
std::vector<Poly> line_ideal_generators(const std::vector<CycNum>& pt) {
    const std::size_t nv = pt.size();
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            if (pt[i].is_zero() && pt[j].is_zero()) continue;
            Poly g = Poly::variable(nv, i).scaled(pt[j]) - Poly::variable(nv, j).scaled(pt[i]);
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
    return gens;
}

struct InterpolationRun {
    std::vector<Poly> generators;
    unsigned regularity_index = 0;
    unsigned last_degree = 0;
};

// Homogeneous forms vanishing on all lines, collected degree by degree. A
// homogeneous form vanishes on a line iff it vanishes at one nonzero point
// of it, so the degree-d slice of the ideal is the kernel of the evaluation
// map at the line representatives. The ideal of a reduced zero-dimensional
// projective scheme is generated in degrees up to (regularity index + 1),
// where the regularity index is the first degree whose evaluation rank
// reaches the number of lines; collecting kernels through that degree is
// guaranteed complete. The count of lines is a hard cap in any case.
InterpolationRun interpolate_cone(const std::vector<std::vector<CycNum>>& points, std::size_t nv,
                                  const MonomialOrder& order) {
    const std::size_t num_lines = points.size();
    InterpolationRun run;
    std::optional<unsigned> rho;
    std::vector<Poly> collected;
    for (unsigned d = 1; d <= num_lines; ++d) {
        std::vector<Monomial> monos = monomials_of_degree(nv, d);
        std::vector<std::vector<CycNum>> m(num_lines, std::vector<CycNum>(monos.size()));
        for (std::size_t r = 0; r < num_lines; ++r)
            for (std::size_t c = 0; c < monos.size(); ++c) {
                CycNum v(1);
                for (std::size_t i = 0; i < nv; ++i)
                    if (monos[c].exps[i] > 0) v *= points[r][i].pow(monos[c].exps[i]);
                m[r][c] = std::move(v);
            }
        std::vector<std::size_t> pivots = rref(m);
        // kernel basis: one vector per free column, canonical from the RREF
        std::vector<bool> is_pivot(monos.size(), false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        for (std::size_t c = 0; c < monos.size(); ++c) {
            if (is_pivot[c]) continue;
            std::vector<Term> terms;
            terms.push_back({monos[c], CycNum(1)});
            for (std::size_t pi = 0; pi < pivots.size(); ++pi)
                if (!m[pi][c].is_zero()) terms.push_back({monos[pivots[pi]], -m[pi][c]});
            collected.push_back(Poly::from_terms(nv, std::move(terms)));
        }
        run.last_degree = d;
        if (!rho && pivots.size() == num_lines) {
            rho = d;
            run.regularity_index = d;
        }
        if (rho && d >= *rho + 1) break;
    }
    if (!rho) throw Error("interpolation never reached full evaluation rank");

    // keep only generators not already generated in lower degree
    std::vector<Poly> essential;
    for (const Poly& p : collected) {
        if (essential.empty()) {
            essential.push_back(p);
            continue;
        }
        Ideal sofar(nv, essential, order);
        if (!reduce(p, sofar.groebner_basis(), order).is_zero()) essential.push_back(p);
    }
    run.generators = std::move(essential);
    return run;
}

void check_cone_invariants(const ConeIdeal& cone) {
    std::vector<std::vector<CycNum>> pts;
    for (const CycMatrix& rep : cone.line_reps)
        pts.push_back(matrix_point(rep, cone.group.conductor()));
    for (const Poly& g : cone.ideal.generators()) {
        if (!g.is_homogeneous()) throw Error("cone ideal generator is not homogeneous");
        for (const auto& pt : pts)
            if (!g.evaluate(pt).is_zero())
                throw Error("cone ideal generator does not vanish on a group line");
    }
    VarietyProfile profile = variety_profile(cone.ideal);
    if (profile.dimension != 1 || profile.degree != BigInt(static_cast<long>(pts.size())))
        throw Error("cone ideal profile mismatch: expected (1, " +
                    std::to_string(pts.size()) + ")");
}

}  // namespace

ConeIdeal ConeIdeal::with_order(const MonomialOrder& order) const {
    if (order == ideal.order()) return *this;
    ConeIdeal other{group, line_reps, ideal.with_order(order), construction_log};
    other.ideal = Ideal(ideal.num_vars(), other.ideal.groebner_basis(), order);
    return other;
}

ConeIdeal cone_ideal(const FiniteMatGroup& group, ConeStrategy strategy,
                     const MonomialOrder& order) {
    if (group.order() == 0) throw Error("cone_ideal of an empty group");
    const std::size_t n = group.dim();
    const std::size_t nv = n * n;
    if (nv > 16) throw Error("cone_ideal supports dimension up to 4 (16 matrix entries)");
    std::vector<CycMatrix> reps = scalar_cone_points(group);
    std::vector<std::vector<CycNum>> points;
    for (const CycMatrix& rep : reps) points.push_back(matrix_point(rep, group.conductor()));

    Ideal result;
    std::string log;
    if (strategy == ConeStrategy::intersection) {
        Ideal acc(nv, line_ideal_generators(points.front()), order);
        for (std::size_t i = 1; i < points.size(); ++i)
            acc = ideal_intersect(acc, Ideal(nv, line_ideal_generators(points[i]), order));
        result = Ideal(nv, acc.groebner_basis(), order);
        log = "intersection over " + std::to_string(points.size()) + " lines";
    } else {
        InterpolationRun run = interpolate_cone(points, nv, order);
        result = Ideal(nv, run.generators, order);
        log = "interpolation through degree " + std::to_string(run.last_degree) +
              " (regularity index " + std::to_string(run.regularity_index) + ", " +
              std::to_string(points.size()) + " lines)";
    }

    ConeIdeal cone{group, std::move(reps), std::move(result), std::move(log)};
    check_cone_invariants(cone);
    return cone;
}

EnvelopeBoundResult degree_bound_search(const ConeIdeal& cone) {
    const Ideal& ideal = cone.ideal;
    const MonomialOrder& order = ideal.order();
    const std::vector<Poly>& basis = ideal.groebner_basis();
    if (basis.empty()) throw Error("degree bound search on the zero ideal");

    unsigned max_deg = 0;
    for (const Poly& p : basis)
        max_deg = std::max(max_deg, static_cast<unsigned>(p.total_degree()));

    unsigned found = 0;
    bool prev = false;
    for (unsigned d = 1; d <= max_deg; ++d) {
        std::vector<Poly> truncated;
        for (const Poly& p : basis)
            if (static_cast<unsigned>(p.total_degree()) <= d) truncated.push_back(p);
        bool ok;
        if (truncated.empty()) {
            ok = false;
        } else {
            // J_d is inside the radical ideal I, so sqrt(J_d) = I iff every
            // basis element of I sits in sqrt(J_d); elements of degree <= d
            // are members outright.
            Ideal jd(ideal.num_vars(), truncated, order);
            ok = true;
            for (const Poly& p : basis) {
                if (static_cast<unsigned>(p.total_degree()) <= d) continue;
                if (!radical_member(p, jd)) {
                    ok = false;
                    break;
                }
            }
        }
        if (prev && !ok) throw Error("truncation test lost monotonicity at degree " +
                                     std::to_string(d));
        if (ok && found == 0) found = d;
        prev = ok;
    }
    if (found == 0) throw Error("truncation scan failed to recover the ideal");

    EnvelopeBoundResult out;
    out.d = found;
    out.max_gb_degree = max_deg;
    out.gb_size = basis.size();
    out.profile = variety_profile(ideal);
    out.num_lines = cone.line_reps.size();
    out.group_order = cone.group.order();
    return out;
}

EnvelopeBoundResult degree_bound_search(const FiniteMatGroup& group, const MonomialOrder& order,
                                        ConeStrategy strategy) {
    if (group.dim() != 2) throw Error("degree bound search expects 2x2 matrices");
    for (const CycMatrix& g : group.generators())
        if (g.det() != CycNum(1)) throw Error("degree bound search expects a subgroup of SL2");
    return degree_bound_search(cone_ideal(group, strategy, order));
}

bool check_envelope_membership(const std::vector<CycMatrix>& generators, const Ideal& envelope,
                               std::size_t cap) {
    FiniteMatGroup g = closure(generators, cap);
    if (envelope.num_vars() != g.dim() * g.dim())
        throw Error("envelope ideal lives in the wrong matrix space");
    for (const CycMatrix& m : g.elements()) {
        std::vector<CycNum> pt = matrix_point(m, g.conductor());
        for (const Poly& f : envelope.generators())
            if (!f.evaluate(pt).is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Worked examples
// ---------------------------------------------------------------------------

namespace {

Poly entry_var(std::size_t i, std::size_t j) { return Poly::variable(4, 2 * i + j); }

std::vector<std::vector<std::size_t>> permutations_of(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Monomial> intersect_monomial(const std::vector<Monomial>& a,
                                         const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    for (const Monomial& x : a)
        for (const Monomial& y : b) out.push_back(lcm(x, y));
    // minimalize
    std::sort(out.begin(), out.end(),
              [](const Monomial& x, const Monomial& y) { return x.total < y.total; });
    std::vector<Monomial> min;
    for (const Monomial& m : out) {
        bool covered = false;
        for (const Monomial& kept : min)
            if (kept.divides(m)) {
                covered = true;
                break;
            }
        if (!covered && std::find(min.begin(), min.end(), m) == min.end()) min.push_back(m);
    }
    return min;
}

}  // namespace

Ideal permutation_plane_union_ideal(std::size_t n) {
    const std::size_t nv = n * n;
    std::optional<std::vector<Monomial>> acc;
    for (const auto& perm : permutations_of(n)) {
        std::vector<Monomial> plane;  // variables off the permutation pattern
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (perm[i] != j) plane.push_back(Monomial::var(nv, i * n + j));
        acc = acc ? intersect_monomial(*acc, plane) : plane;
    }
    std::vector<Poly> gens;
    for (const Monomial& m : *acc)
        gens.push_back(Poly::from_terms(nv, {{m, CycNum(1)}}));
    return Ideal(nv, std::move(gens));
}

WorkedExample run_example(const std::string& name, unsigned param) {
    if (param == 0) throw Error("example parameter must be positive");
    WorkedExample out;
    out.name = name;
    out.param = param;
    if (name == "roots-of-unity") {
        if (param > 12) throw Error("roots-of-unity parameter capped at 12");
        Ideal ideal(1, {Poly::variable(1, 0, param) - Poly::constant(1, CycNum(1))});
        out.group_profile = variety_profile(ideal);
        return out;
    }
    if (name == "torus-example") {
        if (param > 6) throw Error("torus-example parameter capped at 6");
        // G = upper triangular with x22 = x11^k; envelope = all triangular
        Ideal group_ideal(4, {entry_var(1, 0), entry_var(1, 1) - Poly::variable(4, 0, param)});
        Ideal envelope_ideal(4, {entry_var(1, 0)});
        out.group_profile = variety_profile(group_ideal);
        out.envelope_profile = variety_profile(envelope_ideal);
        return out;
    }
    if (name == "dihedral-example") {
        if (param > 6) throw Error("dihedral-example parameter capped at 6");
        const unsigned two_m = 2 * param;
        Poly one = Poly::constant(4, CycNum(1));
        // diagonal component: x12 = x21 = 0, x11*x22 = 1, x11^(2m) = 1
        Ideal diag(4, {entry_var(0, 1), entry_var(1, 0), entry_var(0, 0) * entry_var(1, 1) - one,
                       Poly::variable(4, 0, two_m) - one});
        // antidiagonal component: x11 = x22 = 0, x12*x21 = 1, x12^(2m) = 1
        Ideal anti(4, {entry_var(0, 0), entry_var(1, 1), entry_var(0, 1) * entry_var(1, 0) - one,
                       Poly::variable(4, 1, two_m) - one});
        Ideal points = ideal_intersect(diag, anti);
        out.group_profile = variety_profile(points);
        Ideal envelope = ideal_intersect(Ideal(4, {entry_var(0, 1), entry_var(1, 0)}),
                                         Ideal(4, {entry_var(0, 0), entry_var(1, 1)}));
        out.envelope_profile = variety_profile(envelope);
        return out;
    }
    if (name == "permutation-diag") {
        if (param < 2 || param > 4) throw Error("permutation-diag parameter must be 2..4");
        Ideal ideal = permutation_plane_union_ideal(param);
        out.group_profile = variety_profile(ideal);
        return out;
    }
    throw Error("unknown example '" + name + "'");
}

std::vector<WorkedExample> example_degrees(const std::optional<std::string>& name,
                                           std::optional<unsigned> param) {
    const std::vector<std::pair<std::string, std::pair<unsigned, unsigned>>> sweep{
        {"roots-of-unity", {2, 12}},
        {"torus-example", {1, 6}},
        {"dihedral-example", {2, 6}},
        {"permutation-diag", {2, 4}},
    };
    std::vector<WorkedExample> out;
    if (name) {
        const std::vector<std::pair<std::string, unsigned>> defaults{
            {"roots-of-unity", 5}, {"torus-example", 3}, {"dihedral-example", 3},
            {"permutation-diag", 3}};
        unsigned p = param.value_or(0);
        if (p == 0) {
            for (const auto& [n, d] : defaults)
                if (n == *name) p = d;
            if (p == 0) throw Error("unknown example '" + *name + "'");
        }
        out.push_back(run_example(*name, p));
        return out;
    }
    for (const auto& [family, range] : sweep)
        for (unsigned p = range.first; p <= range.second; ++p)
            out.push_back(run_example(family, p));
    return out;
}

}  // namespace toren
