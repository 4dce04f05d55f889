#include "asai/algnum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace asai {

namespace {

using ZPoly = std::vector<mpz_class>; // coefficients, constant term first

long powmodl(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Exact division of integer polynomials (g monic up to sign of leading coeff).
ZPoly zdivexact(ZPoly f, const ZPoly& g) {
    ztrim(f);
    ZPoly q;
    if (f.empty()) return q;
    q.assign(f.size() - g.size() + 1, mpz_class(0));
    for (long d = static_cast<long>(f.size()) - 1; d >= static_cast<long>(g.size()) - 1; --d) {
        mpz_class c = f[d] / g.back();
        q[d - (g.size() - 1)] = c;
        if (c != 0)
            for (size_t j = 0; j < g.size(); ++j) f[d - (g.size() - 1) + j] -= c * g[j];
    }
    ztrim(f);
    if (!f.empty()) throw InternalFault("cyclotomic polynomial division not exact");
    return q;
}

// Phi_N via Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
ZPoly cyclotomic_poly(long N) {
    std::vector<ZPoly> phi(N + 1);
    for (long d = 1; d <= N; ++d) {
        if (N % d != 0) continue;
        ZPoly num(d + 1, mpz_class(0));
        num[0] = -1;
        num[d] = 1;
        for (long e = 1; e < d; ++e)
            if (d % e == 0) num = zdivexact(std::move(num), phi[e]);
        phi[d] = std::move(num);
    }
    return phi[N];
}

using QPoly = std::vector<Rational>;

void qtrim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qmul(const QPoly& f, const QPoly& g) {
    if (f.empty() || g.empty()) return {};
    QPoly h(f.size() + g.size() - 1, Rational(0));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
    return h;
}

QPoly qsub(QPoly f, const QPoly& g) {
    if (f.size() < g.size()) f.resize(g.size(), Rational(0));
    for (size_t i = 0; i < g.size(); ++i) f[i] -= g[i];
    qtrim(f);
    return f;
}

// f mod g and f div g over Q.
std::pair<QPoly, QPoly> qdivmod(QPoly f, const QPoly& g) {
    qtrim(f);
    QPoly q;
    if (f.size() < g.size()) return {q, f};
    q.assign(f.size() - g.size() + 1, Rational(0));
    for (long d = static_cast<long>(f.size()) - 1; d >= static_cast<long>(g.size()) - 1; --d) {
        if (f[d] == 0) continue;
        Rational c = f[d] / g.back();
        q[d - (g.size() - 1)] = c;
        for (size_t j = 0; j < g.size(); ++j) f[d - (g.size() - 1) + j] -= c * g[j];
    }
    qtrim(f);
    return {q, f};
}

} // namespace

// ---------------------------------------------------------------------------
// CycData

CycData::CycData(long N) : N_(N) {
    if (N < 1) throw ValidationError("cyclotomic level must be positive");
    ZPoly phi = cyclotomic_poly(N);
    phi_ = static_cast<long>(phi.size()) - 1;
    minpoly_.resize(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) minpoly_[i] = Rational(phi[i]);
}

std::shared_ptr<const CycData> CycData::make(long N) {
    return std::shared_ptr<const CycData>(new CycData(N));
}

const std::vector<Rational>& CycData::power_row(long e) const {
    if (e < 0 || e >= N_) throw InternalFault("power_row exponent out of range");
    if (e < phi_) throw InternalFault("power_row called below the reduction degree");
    std::lock_guard<std::mutex> lk(mu_);
    while (static_cast<long>(rows_.size()) <= e - phi_) {
        long k = phi_ + static_cast<long>(rows_.size());
        std::vector<Rational> row(phi_, Rational(0));
        if (k == phi_) {
            for (long i = 0; i < phi_; ++i) row[i] = -minpoly_[i]; // monic
        } else {
            const auto& prev = rows_.back();
            // multiply by x, reduce the single overflow coefficient
            Rational top = prev[phi_ - 1];
            for (long i = phi_ - 1; i >= 1; --i) row[i] = prev[i - 1];
            row[0] = 0;
            if (top != 0)
                for (long i = 0; i < phi_; ++i) row[i] += top * rows_[0][i];
        }
        rows_.push_back(std::move(row));
    }
    return rows_[e - phi_];
}

// ---------------------------------------------------------------------------
// Cyc

Cyc::Cyc(std::shared_ptr<const CycData> F) : F_(std::move(F)) {
    c_.assign(F_->degree(), Rational(0));
}

Cyc Cyc::one(std::shared_ptr<const CycData> F) { return from_rational(std::move(F), Rational(1)); }

Cyc Cyc::from_rational(std::shared_ptr<const CycData> F, const Rational& r) {
    Cyc x(std::move(F));
    x.c_[0] = r;
    return x;
}

Cyc Cyc::zeta_pow(std::shared_ptr<const CycData> F, long j) {
    long N = F->level();
    j %= N;
    if (j < 0) j += N;
    Cyc x(F);
    if (j < F->degree()) {
        x.c_[j] = 1;
    } else {
        x.c_ = F->power_row(j);
    }
    return x;
}

bool Cyc::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<Rational> Cyc::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_.empty() ? Rational(0) : c_[0];
}

Cyc Cyc::operator-() const {
    Cyc x(*this);
    for (auto& v : x.c_) v = -v;
    return x;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (!F_) return *this = o;
    if (o.F_ && F_->level() != o.F_->level()) throw InternalFault("mixed cyclotomic levels");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    if (!F_) return *this = -o;
    if (o.F_ && F_->level() != o.F_->level()) throw InternalFault("mixed cyclotomic levels");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyc operator*(const Cyc& x, const Cyc& y) {
    const auto& F = x.F_ ? x.F_ : y.F_;
    if (x.F_ && y.F_ && x.F_->level() != y.F_->level())
        throw InternalFault("mixed cyclotomic levels");
    long phi = F->degree();
    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (long i = 0; i < phi; ++i) {
        if (x.c_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (y.c_[j] == 0) continue;
            conv[i + j] += x.c_[i] * y.c_[j];
        }
    }
    Cyc z(F);
    for (long i = 0; i < phi; ++i) z.c_[i] = conv[i];
    for (long k = 2 * phi - 2; k >= phi; --k) {
        if (conv[k] == 0) continue;
        const auto& row = F->power_row(k);
        for (long i = 0; i < phi; ++i) z.c_[i] += conv[k] * row[i];
    }
    return z;
}

Cyc& Cyc::scale(const Rational& r) {
    for (auto& v : c_) v *= r;
    return *this;
}

Cyc Cyc::conj() const {
    if (!F_) return *this;
    Cyc z(F_);
    long N = F_->level();
    for (long i = 0; i < static_cast<long>(c_.size()); ++i) {
        if (c_[i] == 0) continue;
        if (i == 0) {
            z.c_[0] += c_[0];
            continue;
        }
        long e = N - i;
        if (e < F_->degree()) {
            z.c_[e] += c_[i];
        } else {
            const auto& row = F_->power_row(e);
            for (long j = 0; j < F_->degree(); ++j) z.c_[j] += c_[i] * row[j];
        }
    }
    return z;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw ValidationError("division by zero");
    // extended Euclid against Phi_N over Q
    QPoly a(c_.begin(), c_.end());
    qtrim(a);
    QPoly b = [&] {
        QPoly m(F_->degree() + 1, Rational(0));
        m[F_->degree()] = 1;
        // reconstruct Phi_N from the power row of x^phi
        const auto& r0 = F_->power_row(F_->degree());
        for (long i = 0; i < F_->degree(); ++i) m[i] = -r0[i];
        return m;
    }();
    // invariants: s*a0 + t*b0 = r (t not tracked)
    QPoly r0 = b, r1 = a, s0 = {}, s1 = {Rational(1)};
    while (true) {
        qtrim(r1);
        if (r1.empty()) throw InternalFault("cyclotomic inverse: common factor with Phi_N");
        if (r1.size() == 1) {
            // r1 = const, inverse = s1 / r1
            Cyc z(F_);
            Rational inv = 1 / r1[0];
            for (size_t i = 0; i < s1.size() && i < z.c_.size(); ++i) z.c_[i] = s1[i] * inv;
            // s1 may exceed degree phi-1 only transiently; reduce defensively
            if (s1.size() > static_cast<size_t>(F_->degree())) {
                z = Cyc(F_);
                for (size_t i = 0; i < s1.size(); ++i) {
                    if (s1[i] == 0) continue;
                    Cyc m = Cyc::zeta_pow(F_, static_cast<long>(i) % F_->level());
                    m.scale(s1[i] * inv);
                    z += m;
                }
            }
            return z;
        }
        auto [q, r2] = qdivmod(r0, r1);
        QPoly s2 = qsub(std::move(s0), qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

int Cyc::cmp(const Cyc& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    for (size_t i = 0; i < n; ++i) {
        Rational x = i < c_.size() ? c_[i] : Rational(0);
        Rational y = i < o.c_.size() ? o.c_[i] : Rational(0);
        int s = ::cmp(x, y);
        if (s != 0) return s;
    }
    return 0;
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i > 0) os << "*z^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// AlgCtx / AlgNumber

std::shared_ptr<const AlgCtx> AlgCtx::make(long N, long q) {
    auto C = std::make_shared<AlgCtx>();
    C->cyc = CycData::make(N);
    C->q = q;
    long r = static_cast<long>(std::sqrt(static_cast<double>(q)) + 0.5);
    C->sqrt_q = (r * r == q) ? r : 0;
    return C;
}

std::shared_ptr<const AlgCtx> AlgCtx::make_with_sqrt(long N, long p, int f) {
    long q = 1;
    for (int i = 0; i < f; ++i) q *= p;
    auto C = std::make_shared<AlgCtx>();
    C->cyc = CycData::make(N);
    C->q = q;
    long r = static_cast<long>(std::sqrt(static_cast<double>(q)) + 0.5);
    C->sqrt_q = (r * r == q) ? r : 0;
    if (C->sqrt_q != 0) return C;
    // sqrt(q) = p^{(f-1)/2} sqrt(p); sqrt(p) from the quadratic Gauss sum
    // g = sum_x (x|p) zeta_p^x, which is sqrt(p) for p = 1 mod 4 and
    // i sqrt(p) for p = 3 mod 4
    if (N % p != 0) throw ValidationError("cyclotomic level must contain zeta_p for sqrt(q)");
    Cyc g = Cyc::zero(C->cyc);
    for (long x = 1; x < p; ++x) {
        long leg = powmodl(x, (p - 1) / 2, p) == 1 ? 1 : -1;
        Cyc term = Cyc::zeta_pow(C->cyc, x * (N / p));
        term.scale(Rational(leg));
        g += term;
    }
    if (p % 4 == 3) {
        if (N % 4 != 0)
            throw ValidationError("cyclotomic level must contain i to realize sqrt(q) for p = 3 mod 4");
        g *= Cyc::zeta_pow(C->cyc, 3 * (N / 4)); // divide by i
    }
    Rational scale(1);
    for (int i = 0; i < (f - 1) / 2; ++i) scale *= p;
    g.scale(scale);
    // sanity: the square really is q
    Cyc sq = g * g;
    auto v = sq.as_rational();
    if (!v || *v != q) throw InternalFault("canonical sqrt(q) construction failed");
    C->sqrt_q_cyc = std::move(g);
    return C;
}

AlgNumber AlgNumber::zero(std::shared_ptr<const AlgCtx> C) {
    AlgNumber x;
    x.C_ = std::move(C);
    x.a_ = Cyc(x.C_->cyc);
    x.b_ = Cyc(x.C_->cyc);
    return x;
}

AlgNumber AlgNumber::one(std::shared_ptr<const AlgCtx> C) { return from_rational(std::move(C), Rational(1)); }

AlgNumber AlgNumber::from_rational(std::shared_ptr<const AlgCtx> C, const Rational& r) {
    AlgNumber x = zero(std::move(C));
    x.a_ = Cyc::from_rational(x.C_->cyc, r);
    return x;
}

AlgNumber AlgNumber::from_int(std::shared_ptr<const AlgCtx> C, long v) {
    return from_rational(std::move(C), Rational(v));
}

AlgNumber AlgNumber::from_cyc(std::shared_ptr<const AlgCtx> C, Cyc a) {
    AlgNumber x = zero(std::move(C));
    x.a_ = std::move(a);
    return x;
}

AlgNumber AlgNumber::zeta_pow(std::shared_ptr<const AlgCtx> C, long j) {
    AlgNumber x = zero(std::move(C));
    x.a_ = Cyc::zeta_pow(x.C_->cyc, j);
    return x;
}

AlgNumber AlgNumber::root_of_unity(std::shared_ptr<const AlgCtx> C, long num, long den) {
    long N = C->cyc->level();
    if (den <= 0 || N % den != 0)
        throw ValidationError("root of unity of order " + std::to_string(den) +
                              " is not in the session value field; raise the cyclotomic level N");
    return zeta_pow(std::move(C), num * (N / den));
}

AlgNumber AlgNumber::q_half_pow(std::shared_ptr<const AlgCtx> C, long m) {
    AlgNumber x = zero(C);
    auto qpow = [&](long e) { // q^e as a rational, e any integer
        Rational r(1);
        Rational base(C->q);
        for (long i = 0; i < std::abs(e); ++i) r *= base;
        if (e < 0) r = 1 / r;
        return r;
    };
    if (m % 2 == 0) {
        x.a_ = Cyc::from_rational(C->cyc, qpow(m / 2));
        return x;
    }
    if (C->sqrt_q != 0) {
        Rational r = qpow((m - 1) / 2);
        r *= C->sqrt_q;
        x.a_ = Cyc::from_rational(C->cyc, r);
        return x;
    }
    if (!C->sqrt_q_cyc.coeffs().empty()) {
        Cyc v = C->sqrt_q_cyc;
        v.scale(qpow((m - 1) / 2));
        x.a_ = std::move(v);
        return x;
    }
    x.b_ = Cyc::from_rational(C->cyc, qpow((m - 1) / 2));
    return x;
}

bool AlgNumber::is_one() const {
    return b_.is_zero() && a_.as_rational() && *a_.as_rational() == 1;
}

std::optional<Rational> AlgNumber::as_rational() const {
    if (!b_.is_zero()) return std::nullopt;
    return a_.as_rational();
}

AlgNumber AlgNumber::operator-() const {
    AlgNumber x(*this);
    x.a_ = -x.a_;
    x.b_ = -x.b_;
    return x;
}

AlgNumber& AlgNumber::operator+=(const AlgNumber& o) {
    if (!C_) return *this = o;
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

AlgNumber& AlgNumber::operator-=(const AlgNumber& o) {
    if (!C_) return *this = -o;
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

AlgNumber operator*(const AlgNumber& x, const AlgNumber& y) {
    if (!x.C_ || !y.C_) throw InternalFault("arithmetic on an uninitialized algebraic number");
    if (x.C_->q != y.C_->q) throw InternalFault("mixed value domains");
    AlgNumber z = AlgNumber::zero(x.C_);
    Cyc bb = x.b_ * y.b_;
    bb.scale(Rational(z.C_->q));
    z.a_ = x.a_ * y.a_ + bb;
    z.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    return z;
}

std::optional<AlgNumber> AlgNumber::try_inverse() const {
    if (is_zero()) return std::nullopt;
    if (b_.is_zero()) {
        AlgNumber z = zero(C_);
        z.a_ = a_.inverse();
        return z;
    }
    // (a + b s)^{-1} = (a - b s)/(a^2 - b^2 q); the norm can vanish when
    // sqrt(q) happens to lie in Q(zeta_N)
    Cyc n = a_ * a_;
    Cyc bq = b_ * b_;
    bq.scale(Rational(C_->q));
    n -= bq;
    if (n.is_zero()) return std::nullopt;
    Cyc ninv = n.inverse();
    AlgNumber z = zero(C_);
    z.a_ = a_ * ninv;
    z.b_ = (-b_) * ninv;
    return z;
}

AlgNumber AlgNumber::inverse() const {
    auto z = try_inverse();
    if (!z) throw ValidationError("algebraic number is zero or not invertible");
    return *z;
}

AlgNumber operator/(const AlgNumber& x, const AlgNumber& y) { return x * y.inverse(); }

AlgNumber AlgNumber::pow(long n) const {
    AlgNumber base = n >= 0 ? *this : inverse();
    long e = std::abs(n);
    AlgNumber acc = one(C_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

AlgNumber AlgNumber::conj() const {
    AlgNumber z(*this);
    z.a_ = a_.conj();
    z.b_ = b_.conj(); // sqrt(q) is real
    return z;
}

bool AlgNumber::is_unitary() const { return (*this * conj()).is_one(); }

std::optional<AlgNumber> AlgNumber::try_sqrt() const {
    if (!C_) return std::nullopt;
    if (is_zero()) return zero(C_);
    // only values of the shape r * zeta^j * q^{h/2} are handled; anything
    // else has no square root we can represent
    AlgNumber nn = *this * conj(); // = r^2 q^h when x has that shape
    long N = C_->cyc->level();
    for (long h = -8; h <= 8; h += 2) { // odd h cannot yield a representable root
        auto r2 = (nn * q_half_pow(C_, -2 * h)).as_rational();
        if (!r2 || *r2 <= 0) continue;
        if (!mpz_perfect_square_p(r2->get_num().get_mpz_t())) continue;
        if (!mpz_perfect_square_p(r2->get_den().get_mpz_t())) continue;
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), r2->get_num().get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), r2->get_den().get_mpz_t());
        Rational r(sn, sd);
        r.canonicalize();
        // v should be +-zeta^j for some j
        AlgNumber v = *this * q_half_pow(C_, -h) * from_rational(C_, 1 / r);
        long j = -1;
        for (long jj = 0; jj < N && j < 0; ++jj)
            if (v == zeta_pow(C_, jj)) j = jj;
        if (j < 0 && N % 2 == 0) {
            AlgNumber w = -v;
            for (long jj = 0; jj < N && j < 0; ++jj)
                if (w == zeta_pow(C_, jj)) j = (jj + N / 2) % N;
        }
        if (j < 0) continue;
        long jhalf;
        if (j % 2 == 0) jhalf = j / 2;
        else if (N % 2 == 1) jhalf = (j + N) / 2;
        else continue;
        if (!mpz_perfect_square_p(r.get_num().get_mpz_t())) continue;
        if (!mpz_perfect_square_p(r.get_den().get_mpz_t())) continue;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), r.get_num().get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), r.get_den().get_mpz_t());
        Rational rho(rn, rd);
        rho.canonicalize();
        AlgNumber s = from_rational(C_, rho) * zeta_pow(C_, jhalf) * q_half_pow(C_, h / 2);
        if (s * s == *this) return s;
    }
    return std::nullopt;
}

int AlgNumber::cmp(const AlgNumber& o) const {
    int s = a_.cmp(o.a_);
    if (s != 0) return s;
    return b_.cmp(o.b_);
}

std::string AlgNumber::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str() + " + ";
    return s + "(" + b_.str() + ")*q^(1/2)";
}

} // namespace asai
