#include "toren/exactnum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace toren {

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    try {
        Rational q(s);
        if (q.get_den() == 0) throw Error("zero denominator in rational literal '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal '" + s + "'");
    }
}

unsigned euler_phi(unsigned n) {
    if (n == 0) throw Error("euler_phi(0) undefined");
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

unsigned long lcm_u(unsigned long a, unsigned long b) {
    return std::lcm(a, b);
}

std::vector<unsigned long> sorted_divisors(unsigned long n) {
    std::vector<unsigned long> divs;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace {

using QPoly = std::vector<Rational>;  // dense, low degree first

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

// Euclidean division; returns quotient, leaves remainder in a.
QPoly qp_divmod(QPoly& a, const QPoly& b) {
    QPoly q;
    if (b.empty()) throw Error("polynomial division by zero");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qp_trim(a);
        if (!q.empty() && a.size() >= b.size() && a.size() - b.size() == shift)
            throw Error("polynomial division failed to reduce degree");
    }
    qp_trim(q);
    return q;
}

QPoly qp_exact_div(QPoly a, const QPoly& b) {
    QPoly q = qp_divmod(a, b);
    if (!a.empty()) throw Error("inexact polynomial division");
    return q;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error("cyclotomic polynomial undefined for N = 0");
    // Phi_N = (z^N - 1) / prod_{d | N, d < N} Phi_d
    QPoly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned long d : sorted_divisors(n)) {
        if (d == n) continue;
        num = qp_exact_div(std::move(num), cyclotomic_polynomial(static_cast<unsigned>(d)));
    }
    return num;
}

namespace detail {

struct CycContext {
    unsigned conductor;
    unsigned degree;                                // phi(conductor)
    QPoly minimal_poly;                             // Phi_N, monic
    std::vector<std::vector<Rational>> power_rem;   // z^(degree+j) mod Phi_N
};

namespace {

std::shared_ptr<const CycContext> make_context(unsigned n) {
    auto ctx = std::make_shared<CycContext>();
    ctx->conductor = n;
    ctx->minimal_poly = cyclotomic_polynomial(n);
    ctx->degree = static_cast<unsigned>(ctx->minimal_poly.size() - 1);
    const unsigned d = ctx->degree;
    // z^d = -(c_0 + c_1 z + ... + c_{d-1} z^{d-1}); higher powers by shifting.
    // Products of reduced elements have degree <= 2d-2, so exponents d..2d-2.
    std::vector<Rational> cur(d);
    for (unsigned i = 0; i < d; ++i) cur[i] = -ctx->minimal_poly[i];
    ctx->power_rem.push_back(cur);
    while (d >= 2 && ctx->power_rem.size() < d - 1) {
        std::vector<Rational> next(d, Rational(0));
        Rational top = cur[d - 1];
        for (unsigned i = d - 1; i >= 1; --i) next[i] = cur[i - 1];
        if (top != 0)
            for (unsigned i = 0; i < d; ++i) next[i] += top * ctx->power_rem[0][i];
        ctx->power_rem.push_back(next);
        cur = std::move(next);
    }
    return ctx;
}

std::shared_ptr<const CycContext> context_for(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CycContext>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(n);
    if (it != registry.end()) return it->second;
    auto ctx = make_context(n);
    registry.emplace(n, ctx);
    return ctx;
}

}  // namespace
}  // namespace detail

CycNum::CycNum(std::shared_ptr<const detail::CycContext> ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

CycNum::CycNum() : CycNum(Rational(0)) {}
CycNum::CycNum(long value) : CycNum(Rational(value)) {}

CycNum::CycNum(const Rational& value)
    : ctx_(detail::context_for(1)), coeffs_{value} {}

CycNum CycNum::from_rational(const Rational& value, unsigned conductor) {
    auto ctx = detail::context_for(conductor);
    std::vector<Rational> c(ctx->degree, Rational(0));
    c[0] = value;
    return CycNum(std::move(ctx), std::move(c));
}

CycNum CycNum::root_of_unity(unsigned conductor, long power) {
    if (conductor == 0) throw Error("root of unity needs a positive conductor");
    auto ctx = detail::context_for(conductor);
    long k = power % static_cast<long>(conductor);
    if (k < 0) k += conductor;
    CycNum z(ctx, std::vector<Rational>(ctx->degree, Rational(0)));
    // zeta^k: start from the monomial z^k and reduce if k >= degree.
    if (static_cast<unsigned>(k) < ctx->degree) {
        z.coeffs_[static_cast<std::size_t>(k)] = 1;
        return z;
    }
    CycNum base(ctx, std::vector<Rational>(ctx->degree, Rational(0)));
    if (ctx->degree == 1) {
        // Q(zeta_1) = Q(zeta_2) degenerate: zeta = root of the linear Phi_N.
        base.coeffs_[0] = -ctx->minimal_poly[0];
    } else {
        base.coeffs_[1] = 1;
    }
    return base.pow(k);
}

unsigned CycNum::conductor() const { return ctx_->conductor; }
const std::vector<Rational>& CycNum::coeffs() const { return coeffs_; }

bool CycNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw Error("cyclotomic number is not rational");
    return coeffs_[0];
}

CycNum CycNum::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return CycNum(ctx_, std::move(c));
}

namespace {

// Promote both operands to the lcm conductor in place.
void align(CycNum& a, CycNum& b) {
    if (a.conductor() == b.conductor()) return;
    unsigned target = static_cast<unsigned>(lcm_u(a.conductor(), b.conductor()));
    a = embed_into(a, target);
    b = embed_into(b, target);
}

}  // namespace

CycNum& CycNum::operator+=(const CycNum& rhs) {
    if (conductor() != rhs.conductor()) {
        CycNum a = *this, b = rhs;
        align(a, b);
        *this = a;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
        return *this;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
    *this += -rhs;
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
    if (conductor() != rhs.conductor()) {
        CycNum a = *this, b = rhs;
        align(a, b);
        a *= b;
        *this = a;
        return *this;
    }
    const unsigned d = ctx_->degree;
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (unsigned i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + d);
    for (unsigned k = d; k < 2 * d - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& rem = ctx_->power_rem[k - d];
        for (unsigned i = 0; i < d; ++i) out[i] += prod[k] * rem[i];
    }
    coeffs_ = std::move(out);
    return *this;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw Error("division by zero in Q(zeta)");
    if (is_rational()) return from_rational(Rational(1) / coeffs_[0], conductor());
    // Extended Euclid on (Phi_N, a): track t with t*a = r (mod Phi_N).
    QPoly r0 = ctx_->minimal_poly;
    QPoly r1 = coeffs_;
    qp_trim(r1);
    QPoly t0, t1{Rational(1)};
    while (true) {
        QPoly rem = r0;
        QPoly q = qp_divmod(rem, r1);
        QPoly t2 = t0;
        QPoly qt1 = qp_mul(q, t1);
        if (t2.size() < qt1.size()) t2.resize(qt1.size(), Rational(0));
        for (std::size_t i = 0; i < qt1.size(); ++i) t2[i] -= qt1[i];
        qp_trim(t2);
        r0 = std::move(r1);
        t0 = std::move(t1);
        r1 = std::move(rem);
        t1 = std::move(t2);
        if (r1.empty()) throw Error("inverse does not exist (non-coprime with cyclotomic polynomial)");
        if (r1.size() == 1) break;
    }
    Rational lead = r1[0];
    std::vector<Rational> inv(ctx_->degree, Rational(0));
    for (std::size_t i = 0; i < t1.size() && i < inv.size(); ++i) inv[i] = t1[i] / lead;
    return CycNum(ctx_, std::move(inv));
}

CycNum CycNum::pow(long exponent) const {
    if (exponent == 0) return from_rational(Rational(1), conductor());
    CycNum base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1
                                   : static_cast<unsigned long>(exponent);
    CycNum acc = from_rational(Rational(1), conductor());
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.conductor() == b.conductor()) return a.coeffs() == b.coeffs();
    unsigned target = static_cast<unsigned>(lcm_u(a.conductor(), b.conductor()));
    return embed_into(a, target).coeffs() == embed_into(b, target).coeffs();
}

CycNum embed_into(const CycNum& a, unsigned target) {
    if (target == 0) throw Error("embed_into: target conductor must be positive");
    if (a.conductor() == target) return a;
    if (target % a.conductor() != 0)
        throw Error("embed_into: conductor " + std::to_string(a.conductor()) +
                    " does not divide " + std::to_string(target));
    const unsigned step = target / a.conductor();
    CycNum base = CycNum::root_of_unity(target, step);
    // Horner evaluation of the coefficient polynomial at zeta_target^step.
    CycNum acc = CycNum::from_rational(Rational(0), target);
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        acc *= base;
        acc += CycNum::from_rational(a.coeffs()[i], target);
    }
    return acc;
}

int compare_same_conductor(const CycNum& a, const CycNum& b) {
    if (a.conductor() != b.conductor())
        throw Error("compare_same_conductor: mixed conductors");
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        int c = cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::optional<unsigned long> root_of_unity_order(const CycNum& a) {
    if (a.is_zero()) return std::nullopt;
    // Torsion units of Q(zeta_N) all lie in <-1, zeta_N>.
    unsigned long bound = lcm_u(2, a.conductor());
    CycNum one = CycNum::from_rational(Rational(1), a.conductor());
    if (a.pow(static_cast<long>(bound)) != one) return std::nullopt;
    for (unsigned long k : sorted_divisors(bound))
        if (a.pow(static_cast<long>(k)) == one) return k;
    return std::nullopt;  // unreachable
}

}  // namespace toren
