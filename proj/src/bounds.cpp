#include "toren/bounds.hpp"

#include <numeric>

namespace toren {

namespace {

BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigInt two_pow(unsigned long e) { return pow_ui(BigInt(2), e); }

// element a + b*sqrt(m) of Z[sqrt(m)]
struct QuadInt {
    BigInt a, b;
};

QuadInt mul(const QuadInt& x, const QuadInt& y, const BigInt& m) {
    return {x.a * y.a + x.b * y.b * m, x.a * y.b + x.b * y.a};
}

QuadInt pow(QuadInt base, unsigned long e, const BigInt& m) {
    QuadInt acc{1, 0};
    while (e > 0) {
        if (e & 1) acc = mul(acc, base, m);
        base = mul(base, base, m);
        e >>= 1;
    }
    return acc;
}

}  // namespace

SchurBound schur_bound(unsigned n) {
    if (n == 0) throw Error("schur_bound needs n >= 1");
    const BigInt m = 8 * BigInt(n);
    const unsigned long k = 2ul * n * n;
    QuadInt plus = pow({1, 1}, k, m);    // (1 + sqrt(m))^k
    QuadInt minus = pow({-1, 1}, k, m);  // (sqrt(m) - 1)^k
    BigInt rational_part = plus.a - minus.a;
    BigInt irrational_coeff = plus.b - minus.b;
    if (rational_part != 0) throw Error("schur_bound: even-power terms failed to cancel");
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        BigInt s;
        mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
        return {irrational_coeff * s, true};
    }
    // ceil(c * sqrt(m)) = floor(sqrt(c^2 m)) + 1 since c^2 m is not a square
    BigInt floor_val;
    BigInt radicand = irrational_coeff * irrational_coeff * m;
    mpz_sqrt(floor_val.get_mpz_t(), radicand.get_mpz_t());
    return {floor_val + 1, false};
}

AbelianBound abelian_bound(unsigned n) {
    if (n == 0) throw Error("abelian_bound needs n >= 1");
    AbelianBound r;
    if (n == 1) r.exact = BigInt(2);
    if (n == 2) r.exact = BigInt(6);
    if (n == 3) r.exact = BigInt(12);
    r.upper = 2 * pow_ui(BigInt(3), (static_cast<unsigned long>(n) * n) / 4);
    return r;
}

BigInt unipotent_bound(unsigned n) {
    if (n == 0) throw Error("unipotent_bound needs n >= 1");
    BigInt acc = 1, fact = 1;
    for (unsigned k = 1; k + 1 <= n; ++k) {
        fact *= k;
        acc *= fact;
    }
    return acc;
}

BigInt reductive_bound(unsigned n) {
    if (n < 2) throw Error("reductive_bound needs n >= 2 (negative exponent otherwise)");
    unsigned long e = static_cast<unsigned long>(n) * n + n - 5;
    return schur_bound(n).value * abelian_bound(n - 1).best() * pow_ui(BigInt(n), e);
}

BigInt product_bound(const BigInt& d1, const BigInt& d2, unsigned n) {
    if (d1 < 1 || d2 < 1) throw Error("product_bound needs positive degrees");
    return d1 * d2 * two_pow(static_cast<unsigned long>(n) * (n - 1) / 2);
}

BigInt product_bound_blocks(const BigInt& d1, const BigInt& d2, unsigned n,
                            const std::vector<unsigned>& blocks) {
    if (d1 < 1 || d2 < 1) throw Error("product_bound needs positive degrees");
    unsigned long sum = 0, quad = 0;
    for (unsigned b : blocks) {
        sum += b;
        quad += static_cast<unsigned long>(b) * (b - 1) / 2;
    }
    if (sum != n) throw Error("block sizes must sum to the dimension");
    unsigned long e = static_cast<unsigned long>(n) * (n - 1) / 2 - quad;
    return d1 * d2 * two_pow(e);
}

BigInt tight_bound(unsigned n) {
    return reductive_bound(n) * two_pow(static_cast<unsigned long>(n) * (n - 1) / 2) *
           unipotent_bound(n);
}

BigInt headline_bound(unsigned n) {
    switch (n) {
        case 0: throw Error("headline_bound needs n >= 1");
        case 1: return BigInt(1);
        case 2: return BigInt(6);
        case 3: return BigInt(360);
        default: return pow_ui(BigInt(4) * n, 3ul * n * n);
    }
}

BigInt factorial_lower_bound(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BoundReport bound_report(unsigned n) {
    BoundReport r;
    r.n = n;
    SchurBound s = schur_bound(n);
    r.schur = s.value;
    r.schur_exact = s.exact;
    AbelianBound a = abelian_bound(n);
    r.abelian_exact = a.exact;
    r.abelian_upper = a.upper;
    r.unipotent = unipotent_bound(n);
    r.product_factor = two_pow(static_cast<unsigned long>(n) * (n - 1) / 2);
    r.headline = headline_bound(n);
    r.factorial = factorial_lower_bound(n);
    if (n >= 2) {
        r.reductive = reductive_bound(n);
        r.tight = tight_bound(n);
        r.tight_le_headline = *r.tight <= r.headline;
    }
    return r;
}

}  // namespace toren
