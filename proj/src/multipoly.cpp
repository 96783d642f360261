#include "toren/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace toren {

Monomial::Monomial(std::vector<unsigned> e) : exps(std::move(e)) {
    total = std::accumulate(exps.begin(), exps.end(), 0u);
}

Monomial Monomial::one(std::size_t num_vars) {
    return Monomial(std::vector<unsigned>(num_vars, 0));
}

Monomial Monomial::var(std::size_t num_vars, std::size_t index, unsigned exp) {
    if (index >= num_vars) throw Error("variable index out of range");
    std::vector<unsigned> e(num_vars, 0);
    e[index] = exp;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& m) const {
    if (exps.size() != m.exps.size()) throw Error("monomials from different rings");
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > m.exps[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    if (exps.size() != rhs.exps.size()) throw Error("monomials from different rings");
    Monomial r;
    r.exps.resize(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] + rhs.exps[i];
    r.total = total + rhs.total;
    return r;
}

Monomial Monomial::quotient(const Monomial& m) const {
    Monomial r;
    r.exps.resize(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (m.exps[i] > exps[i]) throw Error("monomial quotient is not a monomial");
        r.exps[i] = exps[i] - m.exps[i];
    }
    r.total = total - m.total;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps.resize(a.exps.size());
    unsigned tot = 0;
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        r.exps[i] = std::max(a.exps[i], b.exps[i]);
        tot += r.exps[i];
    }
    r.total = tot;
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
}

namespace {

// a < b lexicographically on exps[lo..hi)
bool lex_less(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
    }
    return false;
}

unsigned block_total(const Monomial& m, std::size_t lo, std::size_t hi) {
    unsigned t = 0;
    for (std::size_t i = lo; i < hi; ++i) t += m.exps[i];
    return t;
}

bool grlex_block_less(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    unsigned ta = block_total(a, lo, hi), tb = block_total(b, lo, hi);
    if (ta != tb) return ta < tb;
    return lex_less(a, b, lo, hi);
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.exps.size();
    if (n != b.exps.size()) throw Error("comparing monomials from different rings");
    switch (kind) {
        case OrderKind::lex:
            return lex_less(a, b, 0, n);
        case OrderKind::graded_lex:
            if (a.total != b.total) return a.total < b.total;
            return lex_less(a, b, 0, n);
        case OrderKind::graded_reverse_lex: {
            if (a.total != b.total) return a.total < b.total;
            for (std::size_t i = n; i-- > 0;) {
                if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
            }
            return false;
        }
        case OrderKind::elimination: {
            std::size_t k = std::min(block, n);
            if (grlex_block_less(a, b, 0, k)) return true;
            if (grlex_block_less(b, a, 0, k)) return false;
            return grlex_block_less(a, b, k, n);
        }
    }
    throw Error("unknown monomial order");
}

namespace {
const MonomialOrder kCanonical = MonomialOrder::grlex();
}

Poly Poly::zero(std::size_t num_vars) {
    Poly p;
    p.num_vars_ = num_vars;
    return p;
}

Poly Poly::constant(std::size_t num_vars, CycNum c) {
    Poly p;
    p.num_vars_ = num_vars;
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(num_vars), std::move(c)});
    return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t index, unsigned exp) {
    Poly p;
    p.num_vars_ = num_vars;
    if (exp == 0) return constant(num_vars, CycNum(1));
    p.terms_.push_back({Monomial::var(num_vars, index, exp), CycNum(1)});
    return p;
}

Poly Poly::from_terms(std::size_t num_vars, std::vector<Term> terms) {
    for (const Term& t : terms)
        if (t.mono.num_vars() != num_vars) throw Error("term with wrong variable count");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return kCanonical.less(b.mono, a.mono);
    });
    Poly p;
    p.num_vars_ = num_vars;
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    }
    return p;
}

int Poly::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.total));
    return d;
}

bool Poly::is_homogeneous() const {
    for (const Term& t : terms_)
        if (t.mono.total != terms_.front().mono.total) return false;
    return true;
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    if (order == kCanonical) return terms_.front();
    const Term* best = &terms_.front();
    for (const Term& t : terms_)
        if (order.less(best->mono, t.mono)) best = &t;
    return *best;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly Poly::operator+(const Poly& rhs) const {
    if (num_vars_ != rhs.num_vars_) throw Error("polynomials from different rings");
    Poly r;
    r.num_vars_ = num_vars_;
    r.terms_.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        if (terms_[i].mono == rhs.terms_[j].mono) {
            CycNum c = terms_[i].coeff + rhs.terms_[j].coeff;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (kCanonical.less(rhs.terms_[j].mono, terms_[i].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(rhs.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < rhs.terms_.size()) r.terms_.push_back(rhs.terms_[j++]);
    return r;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::times_monomial(const CycNum& c, const Monomial& m) const {
    Poly r;
    r.num_vars_ = num_vars_;
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        CycNum coeff = t.coeff * c;
        if (!coeff.is_zero()) r.terms_.push_back({t.mono * m, std::move(coeff)});
    }
    // multiplying by a fixed monomial preserves the canonical sort
    return r;
}

Poly Poly::scaled(const CycNum& c) const {
    return times_monomial(c, Monomial::one(num_vars_));
}

Poly Poly::operator*(const Poly& rhs) const {
    if (num_vars_ != rhs.num_vars_) throw Error("polynomials from different rings");
    Poly acc = Poly::zero(num_vars_);
    for (const Term& t : rhs.terms_) acc = acc + times_monomial(t.coeff, t.mono);
    return acc;
}

Poly Poly::monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    const CycNum& lc = leading_term(order).coeff;
    return scaled(lc.inverse());
}

CycNum Poly::evaluate(std::span<const CycNum> point) const {
    if (point.size() != num_vars_) throw Error("evaluation point has wrong length");
    CycNum acc(0);
    for (const Term& t : terms_) {
        CycNum v = t.coeff;
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (t.mono.exps[i] > 0) v *= point[i].pow(t.mono.exps[i]);
        acc += v;
    }
    return acc;
}

Poly Poly::with_variables(std::size_t front, std::size_t back) const {
    Poly r;
    r.num_vars_ = num_vars_ + front + back;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::vector<unsigned> e(r.num_vars_, 0);
        std::copy(t.mono.exps.begin(), t.mono.exps.end(), e.begin() + front);
        r.terms_.push_back({Monomial(std::move(e)), t.coeff});
    }
    return r;  // padding with zeros preserves the canonical sort
}

Poly Poly::drop_leading_variables(std::size_t front) const {
    Poly r;
    r.num_vars_ = num_vars_ - front;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        for (std::size_t i = 0; i < front; ++i)
            if (t.mono.exps[i] != 0)
                throw Error("cannot drop a variable that still occurs");
        std::vector<unsigned> e(t.mono.exps.begin() + front, t.mono.exps.end());
        r.terms_.push_back({Monomial(std::move(e)), t.coeff});
    }
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono) return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Hilbert series of a monomial quotient ring
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<BigInt>;  // numerator of the Hilbert series, dense

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void zp_add_scaled_shift(ZPoly& a, const ZPoly& b, unsigned shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, BigInt(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
    zp_trim(a);
}

// Keep only minimal generators (none divides another); drops duplicates.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.total < b.total; });
    std::vector<Monomial> out;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& kept : out)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

// Numerator of the Hilbert series of R/I over (1-t)^n, by pivot splitting.
ZPoly hilbert_numerator(std::vector<Monomial> gens, std::size_t num_vars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {BigInt(1)};
    if (gens.size() == 1 && gens[0].is_one()) return {};  // unit ideal: series 0
    for (const Monomial& g : gens)
        if (g.is_one()) return {};

    // complete-intersection base case: pure powers of distinct variables
    bool pure_powers = true;
    {
        std::vector<bool> used(num_vars, false);
        for (const Monomial& g : gens) {
            std::size_t support = 0, var = 0;
            for (std::size_t i = 0; i < num_vars; ++i)
                if (g.exps[i] > 0) {
                    ++support;
                    var = i;
                }
            if (support != 1 || used[var]) {
                pure_powers = false;
                break;
            }
            used[var] = true;
        }
    }
    if (pure_powers) {
        ZPoly acc{BigInt(1)};
        for (const Monomial& g : gens) {
            ZPoly next(acc.size() + g.total, BigInt(0));
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i] += acc[i];
                next[i + g.total] -= acc[i];
            }
            acc = std::move(next);
            zp_trim(acc);
        }
        return acc;
    }

    // pivot on the most frequent variable among non-pure-power generators
    std::vector<std::size_t> freq(num_vars, 0);
    for (const Monomial& g : gens) {
        bool pure = std::count_if(g.exps.begin(), g.exps.end(),
                                  [](unsigned e) { return e > 0; }) == 1;
        if (pure) continue;
        for (std::size_t i = 0; i < num_vars; ++i)
            if (g.exps[i] > 0) ++freq[i];
    }
    std::size_t pivot = std::max_element(freq.begin(), freq.end()) - freq.begin();

    // I + <x_pivot>
    std::vector<Monomial> plus{Monomial::var(num_vars, pivot)};
    for (const Monomial& g : gens)
        if (g.exps[pivot] == 0) plus.push_back(g);

    // I : x_pivot
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const Monomial& g : gens) {
        Monomial q = g;
        if (q.exps[pivot] > 0) {
            --q.exps[pivot];
            --q.total;
        }
        colon.push_back(std::move(q));
    }

    // series(R/I) = series(R/(I+p)) + t * series(R/(I:p))
    ZPoly result = hilbert_numerator(std::move(plus), num_vars);
    ZPoly colon_num = hilbert_numerator(std::move(colon), num_vars);
    zp_add_scaled_shift(result, colon_num, 1);
    return result;
}

BigInt zp_eval_at_one(const ZPoly& p) {
    BigInt s = 0;
    for (const BigInt& c : p) s += c;
    return s;
}

// exact division by (1 - t); caller guarantees p(1) == 0
ZPoly zp_div_one_minus_t(const ZPoly& p) {
    // q_i = sum_{j <= i} p_j, dropping the final zero
    ZPoly q(p.size() ? p.size() - 1 : 0, BigInt(0));
    BigInt run = 0;
    for (std::size_t i = 0; i + 1 <= q.size(); ++i) {
        run += p[i];
        q[i] = run;
    }
    zp_trim(q);
    return q;
}

}  // namespace

VarietyProfile hilbert_profile(const std::vector<Monomial>& leading_terms, std::size_t num_vars) {
    if (num_vars == 0) throw Error("hilbert_profile needs at least one variable");
    for (const Monomial& m : leading_terms)
        if (m.num_vars() != num_vars) throw Error("leading term with wrong variable count");
    ZPoly num = hilbert_numerator(leading_terms, num_vars);
    if (num.empty()) throw Error("hilbert_profile of the unit ideal (empty variety)");
    std::size_t cancelled = 0;
    while (cancelled < num_vars && zp_eval_at_one(num) == 0) {
        num = zp_div_one_minus_t(num);
        ++cancelled;
    }
    BigInt degree = zp_eval_at_one(num);
    if (degree <= 0) throw Error("hilbert_profile: nonpositive degree (input not a reduced GB LT set?)");
    VarietyProfile profile;
    profile.dimension = num_vars - cancelled;
    profile.degree = degree;
    return profile;
}

}  // namespace toren
