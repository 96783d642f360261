#include "toren/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace toren {

namespace {

// Working polynomial: terms sorted descending under the active order.
using WPoly = std::vector<Term>;

WPoly to_work(const Poly& p, const MonomialOrder& ord) {
    WPoly w(p.terms().begin(), p.terms().end());
    std::stable_sort(w.begin(), w.end(),
                     [&ord](const Term& a, const Term& b) { return ord.less(b.mono, a.mono); });
    return w;
}

Poly from_work(std::size_t num_vars, const WPoly& w) {
    return Poly::from_terms(num_vars, std::vector<Term>(w.begin(), w.end()));
}

// a[a_from..] - c * m * b, both inputs sorted; result sorted.
WPoly sub_scaled(const WPoly& a, std::size_t a_from, const CycNum& c, const Monomial& m,
                 const WPoly& b, const MonomialOrder& ord) {
    WPoly r;
    r.reserve(a.size() - a_from + b.size());
    std::size_t i = a_from, j = 0;
    while (i < a.size() && j < b.size()) {
        Monomial bm = b[j].mono * m;
        if (a[i].mono == bm) {
            CycNum coeff = a[i].coeff - c * b[j].coeff;
            if (!coeff.is_zero()) r.push_back({std::move(bm), std::move(coeff)});
            ++i, ++j;
        } else if (ord.less(bm, a[i].mono)) {
            r.push_back(a[i++]);
        } else {
            CycNum coeff = -(c * b[j].coeff);
            r.push_back({std::move(bm), std::move(coeff)});
            ++j;
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) {
        CycNum coeff = -(c * b[j].coeff);
        r.push_back({b[j].mono * m, std::move(coeff)});
        ++j;
    }
    return r;
}

// Full normal form of w against basis (first divisor found wins).
WPoly normal_form(WPoly w, const std::vector<WPoly>& basis, const MonomialOrder& ord) {
    WPoly rem;
    std::size_t start = 0;
    while (start < w.size()) {
        bool reduced = false;
        for (const WPoly& g : basis) {
            if (g.empty()) continue;
            if (g.front().mono.divides(w[start].mono)) {
                CycNum c = w[start].coeff * g.front().coeff.inverse();
                Monomial q = w[start].mono.quotient(g.front().mono);
                w = sub_scaled(w, start, c, q, g, ord);
                start = 0;
                reduced = true;
                break;
            }
        }
        if (!reduced) rem.push_back(std::move(w[start++]));
    }
    return rem;
}

WPoly s_polynomial(const WPoly& f, const WPoly& g, const MonomialOrder& ord) {
    Monomial l = lcm(f.front().mono, g.front().mono);
    // l/LT(f) * f - (lc(f)/lc(g)) * l/LT(g) * g, normalized so f's part is monic
    CycNum cf = f.front().coeff.inverse();
    CycNum cg = g.front().coeff.inverse();
    WPoly left;
    left.reserve(f.size());
    Monomial qf = l.quotient(f.front().mono);
    for (const Term& t : f) left.push_back({t.mono * qf, t.coeff * cf});
    return sub_scaled(left, 0, cg, l.quotient(g.front().mono), g, ord);
}

struct PairKey {
    unsigned lcm_total;
    std::vector<unsigned> lcm_exps;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
        if (lcm_total != o.lcm_total) return lcm_total < o.lcm_total;
        if (lcm_exps != o.lcm_exps) return lcm_exps < o.lcm_exps;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

std::vector<Poly> buchberger(const std::vector<Poly>& input, std::size_t num_vars,
                             const MonomialOrder& ord) {
    std::vector<WPoly> basis;
    for (const Poly& p : input) {
        if (p.is_zero()) continue;
        basis.push_back(to_work(p, ord));
    }

    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = lcm(basis[i].front().mono, basis[j].front().mono);
        queue.insert({l.total, l.exps, i, j});
        pending.insert({i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    while (!queue.empty()) {
        PairKey key = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({key.i, key.j});
        const WPoly& f = basis[key.i];
        const WPoly& g = basis[key.j];

        // first Buchberger criterion: coprime leading terms
        if (coprime(f.front().mono, g.front().mono)) continue;

        // chain criterion: some k divides the lcm and both side pairs are done
        Monomial l = lcm(f.front().mono, g.front().mono);
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == key.i || k == key.j) continue;
            if (!basis[k].front().mono.divides(l)) continue;
            auto ik = std::minmax(key.i, k);
            auto jk = std::minmax(key.j, k);
            if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second}))
                skip = true;
        }
        if (skip) continue;

        WPoly r = normal_form(s_polynomial(f, g, ord), basis, ord);
        if (r.empty()) continue;
        basis.push_back(std::move(r));
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
    }

    // minimalize: drop elements whose leading term another leading term divides
    std::vector<std::size_t> order_by_lt(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) order_by_lt[i] = i;
    std::sort(order_by_lt.begin(), order_by_lt.end(), [&](std::size_t a, std::size_t b) {
        if (basis[a].front().mono == basis[b].front().mono) return a < b;
        return ord.less(basis[a].front().mono, basis[b].front().mono);
    });
    std::vector<WPoly> minimal;
    for (std::size_t idx : order_by_lt) {
        bool covered = false;
        for (const WPoly& kept : minimal)
            if (kept.front().mono.divides(basis[idx].front().mono)) {
                covered = true;
                break;
            }
        if (!covered) minimal.push_back(basis[idx]);
    }

    // tail-reduce each element against the others and make monic
    std::vector<WPoly> reduced(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<WPoly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        WPoly nf = normal_form(minimal[i], others, ord);
        CycNum inv = nf.front().coeff.inverse();
        for (Term& t : nf) t.coeff = t.coeff * inv;
        reduced[i] = std::move(nf);
    }

    std::vector<Poly> out;
    out.reserve(reduced.size());
    for (const WPoly& w : reduced) out.push_back(from_work(num_vars, w));
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
        return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
    });
    return out;
}

}  // namespace

struct Ideal::Cache {
    std::once_flag flag;
    std::vector<Poly> gb;
};

Ideal::Ideal(std::size_t num_vars, std::vector<Poly> generators, MonomialOrder order)
    : num_vars_(num_vars), order_(order), cache_(std::make_shared<Cache>()) {
    for (const Poly& g : generators) {
        if (g.num_vars() != num_vars) throw Error("ideal generator from a different ring");
        if (!g.is_zero()) generators_.push_back(g);
    }
}

const std::vector<Poly>& Ideal::groebner_basis() const {
    if (!cache_) throw Error("uninitialized ideal");
    std::call_once(cache_->flag,
                   [this] { cache_->gb = buchberger(generators_, num_vars_, order_); });
    return cache_->gb;
}

Ideal Ideal::with_order(const MonomialOrder& order) const {
    if (order == order_) return *this;
    return Ideal(num_vars_, generators_, order);
}

const std::vector<Poly>& groebner_basis(const Ideal& ideal) { return ideal.groebner_basis(); }

Poly reduce(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order) {
    std::vector<WPoly> wbasis;
    wbasis.reserve(basis.size());
    for (const Poly& b : basis) {
        if (b.is_zero()) throw Error("reduce: zero polynomial in basis");
        wbasis.push_back(to_work(b, order));
    }
    return from_work(p.num_vars(), normal_form(to_work(p, order), wbasis, order));
}

bool ideal_member(const Poly& f, const Ideal& ideal) {
    if (f.num_vars() != ideal.num_vars()) throw Error("ideal_member: different rings");
    if (f.is_zero()) return true;
    const auto& gb = ideal.groebner_basis();
    if (gb.empty()) return false;  // zero ideal
    return reduce(f, gb, ideal.order()).is_zero();
}

bool radical_member(const Poly& f, const Ideal& ideal) {
    if (f.num_vars() != ideal.num_vars()) throw Error("radical_member: different rings");
    const std::size_t n = ideal.num_vars();
    std::vector<Poly> gens;
    for (const Poly& g : ideal.groebner_basis()) gens.push_back(g.with_variables(0, 1));
    // 1 - t*f with t the fresh trailing variable
    Poly t = Poly::variable(n + 1, n);
    gens.push_back(Poly::constant(n + 1, CycNum(1)) - f.with_variables(0, 1) * t);
    Ideal extended(n + 1, std::move(gens), MonomialOrder::grlex());
    const auto& gb = extended.groebner_basis();
    return gb.size() == 1 && gb.front() == Poly::constant(n + 1, CycNum(1));
}

Ideal ideal_intersect(const Ideal& lhs, const Ideal& rhs) {
    if (lhs.num_vars() != rhs.num_vars()) throw Error("ideal_intersect: different rings");
    const std::size_t n = lhs.num_vars();
    Poly t = Poly::variable(n + 1, 0);
    Poly one_minus_t = Poly::constant(n + 1, CycNum(1)) - t;
    std::vector<Poly> gens;
    for (const Poly& f : lhs.generators()) gens.push_back(t * f.with_variables(1, 0));
    for (const Poly& g : rhs.generators()) gens.push_back(one_minus_t * g.with_variables(1, 0));
    Ideal mixed(n + 1, std::move(gens), MonomialOrder::elimination(1));
    std::vector<Poly> kept;
    for (const Poly& p : mixed.groebner_basis()) {
        bool has_t = false;
        for (const Term& term : p.terms())
            if (term.mono.exps[0] > 0) {
                has_t = true;
                break;
            }
        if (!has_t) kept.push_back(p.drop_leading_variables(1));
    }
    return Ideal(n, std::move(kept), lhs.order());
}

bool ideal_equal(const Ideal& lhs, const Ideal& rhs) {
    if (lhs.num_vars() != rhs.num_vars()) throw Error("ideal_equal: different rings");
    const Ideal aligned = rhs.order() == lhs.order() ? rhs : rhs.with_order(lhs.order());
    const auto& a = lhs.groebner_basis();
    const auto& b = aligned.groebner_basis();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Ideal eliminate(const Ideal& ideal, std::size_t lead_vars) {
    if (lead_vars > ideal.num_vars()) throw Error("eliminate: block larger than ring");
    Ideal blocked = ideal.with_order(MonomialOrder::elimination(lead_vars));
    std::vector<Poly> kept;
    for (const Poly& p : blocked.groebner_basis()) {
        bool uses_block = false;
        for (const Term& term : p.terms())
            for (std::size_t i = 0; i < lead_vars && !uses_block; ++i)
                if (term.mono.exps[i] > 0) uses_block = true;
        if (!uses_block) kept.push_back(p.drop_leading_variables(lead_vars));
    }
    return Ideal(ideal.num_vars() - lead_vars, std::move(kept), MonomialOrder::grlex());
}

}  // namespace toren
