#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toren/groebner.hpp"

using namespace toren;

namespace {

Poly var(std::size_t n, std::size_t i, unsigned e = 1) { return Poly::variable(n, i, e); }
Poly con(std::size_t n, long c) { return Poly::constant(n, CycNum(c)); }

const MonomialOrder grlex = MonomialOrder::grlex();

// Ground truth for GB-ness: every S-polynomial of the basis reduces to zero.
bool spair_closure_holds(const std::vector<Poly>& gb, const MonomialOrder& ord) {
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            const Term& fi = gb[i].leading_term(ord);
            const Term& fj = gb[j].leading_term(ord);
            Monomial l = lcm(fi.mono, fj.mono);
            Poly s = gb[i].times_monomial(fi.coeff.inverse(), l.quotient(fi.mono)) -
                     gb[j].times_monomial(fj.coeff.inverse(), l.quotient(fj.mono));
            if (!reduce(s, gb, ord).is_zero()) return false;
        }
    return true;
}

bool is_reduced_basis(const std::vector<Poly>& gb, const MonomialOrder& ord) {
    for (std::size_t i = 0; i < gb.size(); ++i) {
        if (gb[i].leading_term(ord).coeff != CycNum(1)) return false;
        for (std::size_t j = 0; j < gb.size(); ++j) {
            if (i == j) continue;
            for (const Term& t : gb[i].terms())
                if (gb[j].leading_term(ord).mono.divides(t.mono)) return false;
        }
    }
    return true;
}

// Vanishing ideal of a single rational point, as linear generators.
Ideal point_ideal(const std::vector<Rational>& pt) {
    const std::size_t n = pt.size();
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(var(n, i) - Poly::constant(n, CycNum(pt[i])));
    return Ideal(n, std::move(gens));
}

bool vanishes_at(const Ideal& ideal, const std::vector<Rational>& pt) {
    std::vector<CycNum> cpt;
    for (const Rational& q : pt) cpt.emplace_back(q);
    for (const Poly& g : ideal.generators())
        if (!g.evaluate(cpt).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("reduce: frozen division oracles") {
    const std::size_t n = 2;
    Poly x = var(n, 0), y = var(n, 1);

    CHECK(reduce(x * x, {x}, grlex).is_zero());
    CHECK(reduce(x * x * y + con(n, 1), {x * x}, grlex) == con(n, 1));
    // xy - 1 = y*(x - 1) + (y - 1)
    CHECK(reduce(x * y - con(n, 1), {x - con(n, 1)}, grlex) == y - con(n, 1));
}

TEST_CASE("groebner_basis: frozen small bases") {
    const std::size_t n = 2;
    Poly x = var(n, 0), y = var(n, 1);

    Ideal axes(n, {x, y});
    CHECK(axes.groebner_basis() == std::vector<Poly>{y, x});  // ascending leading terms

    // <x^2 - 1, xy - y>: the lone S-pair reduces to zero, so already a GB
    Ideal two(n, {x * x - con(n, 1), x * y - y});
    CHECK(two.groebner_basis() == std::vector<Poly>{x * y - y, x * x - con(n, 1)});
    CHECK(spair_closure_holds(two.groebner_basis(), grlex));

    Ideal single(n, {x - y});
    CHECK(single.groebner_basis() == std::vector<Poly>{x - y});

    // zero ideal
    Ideal zero(n, {});
    CHECK(zero.groebner_basis().empty());
}

TEST_CASE("groebner_basis: classic textbook case needs new elements") {
    // <x^2 + y, xy + x> over grlex; closure must add lower-degree elements
    const std::size_t n = 2;
    Poly x = var(n, 0), y = var(n, 1);
    Ideal ideal(n, {x * x + y, x * y + x});
    const auto& gb = ideal.groebner_basis();
    CHECK(spair_closure_holds(gb, grlex));
    CHECK(is_reduced_basis(gb, grlex));
    for (const Poly& g : ideal.generators()) CHECK(reduce(g, gb, grlex).is_zero());
}

TEST_CASE("ideal_member: frozen oracles") {
    const std::size_t n = 2;
    Poly x = var(n, 0), y = var(n, 1);

    CHECK(ideal_member(x * x, Ideal(n, {x})));
    CHECK(!ideal_member(x + con(n, 1), Ideal(n, {x})));
    // x^2 + y^2 = (x - y)(x + y) + 2y^2
    CHECK(ideal_member(x * x + y * y, Ideal(n, {x + y, y * y})));
    CHECK(ideal_member(Poly::zero(n), Ideal(n, {x})));
}

TEST_CASE("radical_member: frozen oracles") {
    const std::size_t n = 2;
    Poly x = var(n, 0), y = var(n, 1);
    Ideal xsq(n, {x * x});
    CHECK(radical_member(x, xsq));
    CHECK(!ideal_member(x, xsq));
    CHECK(!radical_member(x + con(n, 1), xsq));

    // x11^3 - x22^3 not in sqrt(<x12, x21>) in the 4-variable matrix ring
    const std::size_t m = 4;
    Ideal plane(m, {var(m, 1), var(m, 2)});
    CHECK(!radical_member(var(m, 0, 3) - var(m, 3, 3), plane));
    CHECK(radical_member(var(m, 1, 2) * var(m, 0), plane));
}

TEST_CASE("ideal_intersect: frozen oracles") {
    const std::size_t n = 2;
    Poly x = var(n, 0), y = var(n, 1);

    Ideal xy = ideal_intersect(Ideal(n, {x}), Ideal(n, {y}));
    CHECK(ideal_equal(xy, Ideal(n, {x * y})));

    Ideal join = ideal_intersect(Ideal(n, {x, y}), Ideal(n, {x - con(n, 1)}));
    CHECK(ideal_equal(join, Ideal(n, {x * x - x, x * y - y})));
    // membership both ways
    CHECK(ideal_member(x * x - x, join));
    CHECK(ideal_member(x * y - y, join));
    CHECK(!ideal_member(x, join));

    Ideal self(n, {x * x + y});
    CHECK(ideal_equal(ideal_intersect(self, self), self));
}

TEST_CASE("ideal_equal: frozen oracles") {
    const std::size_t n = 2;
    Poly x = var(n, 0), y = var(n, 1);
    CHECK(ideal_equal(Ideal(n, {x, y}), Ideal(n, {y, x})));
    CHECK(!ideal_equal(Ideal(n, {x}), Ideal(n, {x * x})));
    CHECK(ideal_equal(Ideal(n, {x + y, x - y}), Ideal(n, {x, y})));
}

TEST_CASE("eliminate: frozen oracles") {
    // eliminate t from <t - x, t - y> leaves <x - y>
    {
        const std::size_t n = 3;  // t, x, y
        Poly t = var(n, 0), x = var(n, 1), y = var(n, 2);
        Ideal elim = eliminate(Ideal(n, {t - x, t - y}), 1);
        CHECK(ideal_equal(elim, Ideal(2, {var(2, 0) - var(2, 1)})));
    }
    // projection of the hyperbola t*x = 1 is dense: eliminating t leaves 0
    {
        const std::size_t n = 2;  // t, x
        Poly t = var(n, 0), x = var(n, 1);
        Ideal elim = eliminate(Ideal(n, {t * x - con(n, 1)}), 1);
        CHECK(elim.generators().empty());
    }
    // twisted cubic: eliminating x from <y - x^2, z - x^3> yields z^2 - y^3 among others
    {
        const std::size_t n = 3;  // x, y, z
        Poly x = var(n, 0), y = var(n, 1), z = var(n, 2);
        Ideal elim = eliminate(Ideal(n, {y - x * x, z - x * x * x}), 1);
        Poly want = var(2, 1, 2) - var(2, 0, 3);  // z^2 - y^3 in (y, z)
        CHECK(ideal_member(want, elim));
        CHECK(!elim.generators().empty());
    }
}

TEST_CASE("GB idempotence and soundness on assorted ideals") {
    const std::size_t n = 3;
    Poly x = var(n, 0), y = var(n, 1), z = var(n, 2);
    std::vector<Ideal> ideals;
    ideals.emplace_back(n, std::vector<Poly>{x * y - z, y * z - x});
    ideals.emplace_back(n, std::vector<Poly>{x * x + y * y + z * z - con(n, 1), x - y});
    ideals.emplace_back(n, std::vector<Poly>{x * x * x - z, x * y - con(n, 2)});
    for (const Ideal& ideal : ideals) {
        const auto& gb = ideal.groebner_basis();
        Ideal again(n, gb, ideal.order());
        CHECK(again.groebner_basis() == gb);
        CHECK(is_reduced_basis(gb, ideal.order()));
        CHECK(spair_closure_holds(gb, ideal.order()));
        for (const Poly& g : ideal.generators()) CHECK(ideal_member(g, ideal));
    }
}

TEST_CASE("grevlex and lex engines work too") {
    const std::size_t n = 3;
    Poly x = var(n, 0), y = var(n, 1), z = var(n, 2);
    std::vector<Poly> gens{x * x + y * y + z * z - con(n, 1), x * y - z, x - z};
    for (MonomialOrder ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
        Ideal ideal(n, gens, ord);
        const auto& gb = ideal.groebner_basis();
        CHECK(spair_closure_holds(gb, ord));
        CHECK(is_reduced_basis(gb, ord));
        for (const Poly& g : gens) CHECK(ideal_member(g, ideal));
    }
}

TEST_CASE("randomized point-set suite: intersect matches evaluation oracle") {
    std::mt19937 rng(20190417);
    std::uniform_int_distribution<int> coord(-1, 1);
    std::uniform_int_distribution<int> npts(1, 3);
    const std::size_t n = 3;

    // 3^3 grid of candidate points
    std::vector<std::vector<Rational>> grid;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c) grid.push_back({Rational(a), Rational(b), Rational(c)});

    int suites = 0;
    for (int trial = 0; trial < 12; ++trial) {
        auto sample = [&] {
            std::vector<std::vector<Rational>> pts;
            int k = npts(rng);
            for (int i = 0; i < k; ++i)
                pts.push_back({Rational(coord(rng)), Rational(coord(rng)), Rational(coord(rng))});
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            return pts;
        };
        auto van_ideal = [&](const std::vector<std::vector<Rational>>& pts) {
            Ideal acc = point_ideal(pts[0]);
            for (std::size_t i = 1; i < pts.size(); ++i)
                acc = ideal_intersect(acc, point_ideal(pts[i]));
            return acc;
        };
        auto a_pts = sample(), b_pts = sample();
        Ideal ia = van_ideal(a_pts), ib = van_ideal(b_pts);
        Ideal meet = ideal_intersect(ia, ib);

        // V(I cap J) read from the grid must be exactly union of the point sets
        for (const auto& pt : grid) {
            bool in_union = std::find(a_pts.begin(), a_pts.end(), pt) != a_pts.end() ||
                            std::find(b_pts.begin(), b_pts.end(), pt) != b_pts.end();
            CHECK(vanishes_at(meet, pt) == in_union);
        }
        const auto& gb = meet.groebner_basis();
        CHECK(spair_closure_holds(gb, meet.order()));
        CHECK(Ideal(n, gb).groebner_basis() == gb);
        ++suites;
    }
    CHECK(suites == 12);
}

TEST_CASE("reduction never raises the total degree under graded orders") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> exp(0, 2), terms(1, 5);
    const std::size_t n = 3;
    auto random_poly = [&] {
        std::vector<Term> ts;
        for (unsigned t = 0, k = terms(rng); t < k; ++t) {
            std::vector<unsigned> e{exp(rng), exp(rng), exp(rng)};
            ts.push_back({Monomial(e), CycNum(coeff(rng))});
        }
        return Poly::from_terms(n, std::move(ts));
    };
    for (int trial = 0; trial < 80; ++trial) {
        Poly p = random_poly();
        std::vector<Poly> basis;
        for (int b = 0; b < 2; ++b) {
            Poly q = random_poly();
            if (!q.is_zero()) basis.push_back(q);
        }
        if (basis.empty() || p.is_zero()) continue;
        for (MonomialOrder ord : {MonomialOrder::grlex(), MonomialOrder::grevlex()}) {
            Poly r = reduce(p, basis, ord);
            CHECK(r.total_degree() <= p.total_degree());
        }
    }
}

TEST_CASE("randomized GB property suite on small dense ideals") {
    std::mt19937 rng(8823);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> nv(1, 3), terms(1, 4), deg(0, 3), cnt(1, 3);
    int nontrivial = 0;
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = nv(rng);
        std::vector<Poly> gens;
        for (unsigned g = 0, k = cnt(rng); g < k; ++g) {
            std::vector<Term> ts;
            for (unsigned t = 0, m = terms(rng); t < m; ++t) {
                std::vector<unsigned> e(n, 0);
                unsigned budget = deg(rng);
                for (auto& x : e) {
                    std::uniform_int_distribution<unsigned> part(0, budget);
                    x = part(rng);
                    budget -= x;
                }
                ts.push_back({Monomial(e), CycNum(coeff(rng))});
            }
            Poly p = Poly::from_terms(n, std::move(ts));
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        Ideal ideal(n, gens);
        const auto& gb = ideal.groebner_basis();
        if (gb.empty()) continue;
        CHECK(spair_closure_holds(gb, grlex));
        CHECK(is_reduced_basis(gb, grlex));
        CHECK(Ideal(n, gb).groebner_basis() == gb);
        for (const Poly& g : gens) CHECK(ideal_member(g, ideal));
        ++nontrivial;
    }
    CHECK(nontrivial >= 20);
}
