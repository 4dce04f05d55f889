#include "asai/localfield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace asai {

namespace {

long powmod(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

long lcm2(long a, long b) { return a / std::gcd(a, b) * b; }

// --- polynomial arithmetic over F_p, coefficient vectors (constant first) ---

std::vector<long> pmod_trim(std::vector<long> f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

std::vector<long> pmod_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return pmod_trim(std::move(c));
}

std::vector<long> pmod_rem(std::vector<long> f, const std::vector<long>& g, long p) {
    // g monic
    while (f.size() >= g.size()) {
        long c = f.back();
        if (c != 0) {
            size_t off = f.size() - g.size();
            for (size_t j = 0; j < g.size(); ++j) f[off + j] = ((f[off + j] - c * g[j]) % p + p) % p;
        }
        f.pop_back();
        f = pmod_trim(std::move(f));
        if (f.size() < g.size()) break;
    }
    return f;
}

std::vector<long> pmod_powmod(std::vector<long> base, long e, const std::vector<long>& mod, long p) {
    std::vector<long> r = {1};
    while (e > 0) {
        if (e & 1) r = pmod_rem(pmod_mul(r, base, p), mod, p);
        base = pmod_rem(pmod_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

std::vector<long> pmod_gcd(std::vector<long> a, std::vector<long> b, long p) {
    a = pmod_trim(std::move(a));
    b = pmod_trim(std::move(b));
    while (!b.empty()) {
        // make b monic for pmod_rem
        long lead = b.back();
        if (lead != 1) {
            long inv = powmod(lead, p - 2, p);
            for (auto& c : b) c = (c * inv) % p;
        }
        auto r = pmod_rem(std::move(a), b, p);
        a = std::move(b);
        b = pmod_trim(std::move(r));
    }
    return a;
}

bool is_irreducible(const std::vector<long>& f, long p) {
    long m = static_cast<long>(f.size()) - 1;
    std::vector<long> x = {0, 1};
    // x^{p^m} == x mod f
    std::vector<long> xe = x;
    for (long i = 0; i < m; ++i) xe = pmod_powmod(xe, p, f, p);
    auto diff = xe;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    if (!pmod_trim(diff).empty()) return false;
    for (long l : prime_factors(m)) {
        std::vector<long> xf = x;
        for (long i = 0; i < m / l; ++i) xf = pmod_powmod(xf, p, f, p);
        auto d = xf;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        auto g = pmod_gcd(f, pmod_trim(d), p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<long> decode(long code, long p, int m) {
    std::vector<long> c(m, 0);
    for (int i = 0; i < m; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

long encode(const std::vector<long>& c, long p, int m) {
    long code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return code;
}

} // namespace

// ---------------------------------------------------------------------------
// FqTable

std::string LocalField::str() const {
    std::ostringstream os;
    if (is_base()) {
        os << "F(q=" << q << ")";
    } else {
        os << (kind == ExtKind::Unramified ? "unramified" : "ramified") << " degree-" << d
           << " extension (q=" << q << ")";
        if (kind == ExtKind::Ramified) os << " [uniformizer class " << ram_class << "]";
    }
    return os.str();
}

long FqTable::ind(long code) const {
    if (code <= 0 || code >= q) throw ValidationError("discrete log of a non-unit");
    long j = dlog[code];
    if (j < 0) throw InternalFault("dlog table corrupt");
    return j;
}

long FqTable::mul_code(long a, long b) const {
    if (a == 0 || b == 0) return 0;
    if (m == 1) return (a * b) % p;
    auto c = pmod_mul(decode(a, p, m), decode(b, p, m), p);
    c = pmod_rem(std::move(c), modulus, p);
    return encode(c, p, m);
}

long FqTable::add_code(long a, long b) const {
    if (m == 1) return (a + b) % p;
    auto ca = decode(a, p, m), cb = decode(b, p, m);
    for (int i = 0; i < m; ++i) ca[i] = (ca[i] + cb[i]) % p;
    return encode(ca, p, m);
}

std::vector<long> FqTable::min_poly(long code) const {
    // product of (x - code^{p^i}) over distinct conjugates
    std::vector<long> conj;
    long c = code;
    do {
        conj.push_back(c);
        long cp = c;
        for (long i = 1; i < p; ++i) cp = mul_code(cp, c); // c^p
        c = cp;
    } while (c != code);
    // multiply out with coefficients as field codes; they must land in F_p
    std::vector<long> acc = {1};
    for (long root : conj) {
        std::vector<long> next(acc.size() + 1, 0);
        long negroot = mul_code(root, p - 1); // -root
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = add_code(next[i + 1], acc[i]);
            next[i] = add_code(next[i], mul_code(acc[i], negroot));
        }
        acc = std::move(next);
    }
    for (long coeff : acc)
        if (coeff >= p) throw InternalFault("minimal polynomial has non-prime-field coefficient");
    return acc;
}

static void fill_tables(FqTable& T) {
    long q = T.q;
    auto order_is_full = [&](long e) {
        for (long l : prime_factors(q - 1)) {
            long exp = (q - 1) / l;
            long acc = 1;
            long base = e;
            while (exp > 0) {
                if (exp & 1) acc = T.mul_code(acc, base);
                base = T.mul_code(base, base);
                exp >>= 1;
            }
            if (acc == 1) return false;
        }
        return true;
    };
    if (T.gen_code == 0) {
        for (long e = 2; e < q; ++e)
            if (order_is_full(e)) {
                T.gen_code = e;
                break;
            }
    }
    if (T.gen_code == 0) throw InternalFault("no generator found");
    T.pow_code.assign(q - 1, 0);
    T.pow_code[0] = 1;
    for (long j = 1; j < q - 1; ++j) T.pow_code[j] = T.mul_code(T.pow_code[j - 1], T.gen_code);
    T.dlog.assign(q, -1);
    for (long j = 0; j < q - 1; ++j) T.dlog[T.pow_code[j]] = j;
    if (T.dlog[1] != 0) throw InternalFault("dlog table inconsistent");
    // absolute traces
    T.trace_gpow.assign(q - 1, 0);
    for (long j = 0; j < q - 1; ++j) {
        long acc = 0;
        long e = j;
        for (int i = 0; i < T.m; ++i) {
            acc = T.add_code(acc, T.pow_code[e]);
            e = (e * T.p) % (q - 1);
        }
        if (acc >= T.p) throw InternalFault("trace not in the prime field");
        T.trace_gpow[j] = acc;
    }
}

FqTable FqTable::build(long p, int m) {
    FqTable T;
    T.p = p;
    T.m = m;
    T.q = 1;
    for (int i = 0; i < m; ++i) T.q *= p;
    if (m > 1) {
        // lex-smallest monic irreducible of degree m
        long count = T.q; // p^m candidates for the lower coefficients
        for (long lo = 0; lo < count; ++lo) {
            auto f = decode(lo, p, m);
            f.push_back(1);
            if (is_irreducible(f, p)) {
                T.modulus = f;
                break;
            }
        }
        if (T.modulus.empty()) throw InternalFault("no irreducible polynomial found");
    }
    fill_tables(T);
    return T;
}

FqTable FqTable::build_compatible(long p, int m, const FqTable& sub) {
    FqTable T;
    T.p = p;
    T.m = m;
    T.q = 1;
    for (int i = 0; i < m; ++i) T.q *= p;
    if (m % sub.m != 0) throw InternalFault("not a subfield");
    long count = T.q;
    for (long lo = 0; lo < count; ++lo) {
        auto f = decode(lo, p, m);
        f.push_back(1);
        if (is_irreducible(f, p)) {
            T.modulus = f;
            break;
        }
    }
    if (T.modulus.empty()) throw InternalFault("no irreducible polynomial found");

    // image of the subfield generator: smallest root of its minimal polynomial
    auto mp = sub.min_poly(sub.gen_code);
    long h = -1;
    for (long e = 1; e < T.q && h < 0; ++e) {
        long v = 0;
        for (long i = static_cast<long>(mp.size()) - 1; i >= 0; --i)
            v = T.add_code(T.mul_code(v, e), mp[i] % p);
        if (v == 0) h = e;
    }
    if (h < 0) throw InternalFault("subfield generator has no root upstairs");

    // generator with norm to the subfield equal to h
    long fiber_exp = (T.q - 1) / (sub.q - 1);
    auto norm_of = [&](long e) {
        long acc = 1, base = e, exp = fiber_exp;
        while (exp > 0) {
            if (exp & 1) acc = T.mul_code(acc, base);
            base = T.mul_code(base, base);
            exp >>= 1;
        }
        return acc;
    };
    auto order_is_full = [&](long e) {
        for (long l : prime_factors(T.q - 1)) {
            long acc = 1, base = e, exp = (T.q - 1) / l;
            while (exp > 0) {
                if (exp & 1) acc = T.mul_code(acc, base);
                base = T.mul_code(base, base);
                exp >>= 1;
            }
            if (acc == 1) return false;
        }
        return true;
    };
    for (long e = 2; e < T.q; ++e)
        if (order_is_full(e) && norm_of(e) == h) {
            T.gen_code = e;
            break;
        }
    if (T.gen_code == 0) throw InternalFault("no norm-compatible generator found");
    fill_tables(T);
    return T;
}

// ---------------------------------------------------------------------------
// Session

Session::Session(const SessionConfig& cfg) : cfg_(cfg) {
    if (cfg.p < 3) throw ValidationError("residue characteristic must be an odd prime");
    for (long d = 2; d * d <= cfg.p; ++d)
        if (cfg.p % d == 0) throw ValidationError("residue characteristic must be an odd prime");
    if (cfg.f < 1 || cfg.f > 2) throw ValidationError("residue degree must be 1 or 2");
    q_ = 1;
    for (int i = 0; i < cfg.f; ++i) q_ *= cfg.p;

    long N = lcm2(2, lcm2(cfg.p, q_ - 1));
    if (cfg.p % 4 == 3 && cfg.f % 2 == 1) N = lcm2(N, 4L); // needed to realize sqrt(q)
    if (cfg.quadratic_unramified) N = lcm2(N, q_ * q_ - 1);
    if (cfg.cubic_unramified) N = lcm2(N, lcm2(q_ * q_ * q_ - 1, 3L));
    if (cfg.extra_torsion > 1) N = lcm2(N, cfg.extra_torsion);
    if (cfg.n_override > 0) N = cfg.n_override;
    N_ = N;
    // realize sqrt(q) inside Q(zeta_N) so the value domain is a field and
    // epsilon values of single ramified characters are literal signs; fall
    // back to the formal pair when an override level cannot express it
    try {
        ctx_ = AlgCtx::make_with_sqrt(N_, cfg.p, cfg.f);
    } catch (const ValidationError&) {
        ctx_ = AlgCtx::make(N_, q_);
    }

    residue_by_degree_.emplace(1, FqTable::build(cfg.p, cfg.f));
    if (cfg.quadratic_unramified)
        residue_by_degree_.emplace(2, FqTable::build_compatible(cfg.p, 2 * cfg.f, residue_by_degree_.at(1)));
    if (cfg.cubic_unramified)
        residue_by_degree_.emplace(3, FqTable::build_compatible(cfg.p, 3 * cfg.f, residue_by_degree_.at(1)));
}

std::shared_ptr<const Session> Session::create(const SessionConfig& cfg) {
    return std::shared_ptr<const Session>(new Session(cfg));
}

LocalField Session::base_field() const { return LocalField{cfg_.p, q_, 1, ExtKind::None, 0}; }

LocalField Session::quadratic(ExtKind kind, int ram_class) const {
    if (kind == ExtKind::Unramified) {
        if (!cfg_.quadratic_unramified) throw ValidationError("unramified quadratic extension not configured");
        return LocalField{cfg_.p, q_ * q_, 2, kind, 0};
    }
    if (!cfg_.quadratic_ramified) throw ValidationError("ramified quadratic extension not configured");
    if (ram_class != 0 && ram_class != 1) throw ValidationError("uniformizer class must be 0 or 1");
    return LocalField{cfg_.p, q_, 2, kind, ram_class};
}

LocalField Session::cubic(ExtKind kind, int ram_class) const {
    if (kind == ExtKind::Unramified) {
        if (!cfg_.cubic_unramified) throw ValidationError("unramified cubic extension not configured");
        return LocalField{cfg_.p, q_ * q_ * q_, 3, kind, 0};
    }
    if (!cfg_.cubic_ramified) throw ValidationError("ramified cubic extension not configured");
    if (cfg_.p == 3) throw ValidationError("ramified cubic extension is wild at p = 3");
    if (ram_class != 0 && ram_class != 1) throw ValidationError("uniformizer class must be 0 or 1");
    return LocalField{cfg_.p, q_, 3, kind, ram_class};
}

bool Session::has_extension(const LocalField& L) const {
    if (L.p != cfg_.p) return false;
    if (L.is_base()) return L.q == q_;
    if (L.d == 2 && L.kind == ExtKind::Unramified) return cfg_.quadratic_unramified && L.q == q_ * q_;
    if (L.d == 2 && L.kind == ExtKind::Ramified) return cfg_.quadratic_ramified && L.q == q_;
    if (L.d == 3 && L.kind == ExtKind::Unramified) return cfg_.cubic_unramified && L.q == q_ * q_ * q_;
    if (L.d == 3 && L.kind == ExtKind::Ramified) return cfg_.cubic_ramified && L.q == q_;
    return false;
}

const FqTable& Session::residue(const LocalField& L) const {
    if (!has_extension(L)) throw ValidationError("field is not part of this session: " + L.str());
    return residue_by_degree_.at(L.residue_degree());
}

AlgNumber Session::zeta_p(long t) const {
    if (N_ % cfg_.p != 0)
        throw ValidationError("cyclotomic level too small for additive characters; raise N");
    return AlgNumber::zeta_pow(ctx_, t * (N_ / cfg_.p));
}

AlgNumber Session::zeta_res(const LocalField& L, long e) const {
    long ql = residue(L).q;
    if (N_ % (ql - 1) != 0)
        throw ValidationError("cyclotomic level too small for characters of " + L.str() + "; raise N");
    long step = N_ / (ql - 1);
    long r = ((e % (ql - 1)) + (ql - 1)) % (ql - 1);
    return AlgNumber::zeta_pow(ctx_, r * step);
}

AlgNumber Session::q_half_of(const LocalField& L, long m) const {
    return AlgNumber::q_half_pow(ctx_, m * L.residue_degree());
}

// ---------------------------------------------------------------------------
// MultChar

MultChar MultChar::build(SessionPtr S, const LocalField& L, long k, AlgNumber u) {
    if (!S->has_extension(L)) throw ValidationError("field is not part of this session: " + L.str());
    if (u.is_zero()) throw ValidationError("character value at the uniformizer must be nonzero");
    long ql = S->residue(L).q;
    long kk = ((k % (ql - 1)) + (ql - 1)) % (ql - 1);
    if (kk != 0) {
        long order = (ql - 1) / std::gcd(kk, ql - 1);
        if (S->level() % order != 0)
            throw ValidationError("tame exponent of order " + std::to_string(order) +
                                  " does not fit the session value field; raise the cyclotomic level N");
    }
    MultChar chi;
    chi.S_ = std::move(S);
    chi.L_ = L;
    chi.k_ = kk;
    chi.u_ = std::move(u);
    return chi;
}

MultChar MultChar::trivial(SessionPtr S, const LocalField& L) {
    auto one = AlgNumber::one(S->ctx());
    return build(std::move(S), L, 0, one);
}

MultChar MultChar::unramified(SessionPtr S, const LocalField& L, AlgNumber u) {
    return build(std::move(S), L, 0, std::move(u));
}

MultChar MultChar::norm_power_half(SessionPtr S, const LocalField& L, long n) {
    auto u = S->q_half_of(L, -n);
    return build(std::move(S), L, 0, std::move(u));
}

bool MultChar::is_trivial() const { return k_ == 0 && u_.is_one(); }

bool MultChar::is_quadratic() const {
    long ql = S_->residue(L_).q;
    return (2 * k_) % (ql - 1) == 0 && (u_ * u_).is_one();
}

AlgNumber MultChar::value_on_unit(long dlog_exp) const { return S_->zeta_res(L_, k_ * dlog_exp); }

AlgNumber MultChar::at_minus_one() const {
    return k_ % 2 == 0 ? S_->one() : S_->integer(-1);
}

MultChar MultChar::inverse() const {
    MultChar chi(*this);
    long ql = S_->residue(L_).q;
    chi.k_ = (ql - 1 - k_) % (ql - 1);
    chi.u_ = u_.inverse();
    return chi;
}

MultChar MultChar::power(long n) const {
    MultChar chi(*this);
    long ql = S_->residue(L_).q;
    chi.k_ = ((k_ * n) % (ql - 1) + (ql - 1)) % (ql - 1);
    chi.u_ = u_.pow(n);
    return chi;
}

MultChar operator*(const MultChar& a, const MultChar& b) {
    if (!(a.L_ == b.L_)) throw ValidationError("characters live on different fields");
    MultChar chi(a);
    long ql = a.S_->residue(a.L_).q;
    chi.k_ = (a.k_ + b.k_) % (ql - 1);
    chi.u_ = a.u_ * b.u_;
    return chi;
}

int MultChar::cmp(const MultChar& o) const {
    auto key = [](const MultChar& c) {
        return std::tuple<long, int, int, int, long>(c.L_.q, c.L_.d, static_cast<int>(c.L_.kind),
                                                     c.L_.ram_class, c.k_);
    };
    if (key(*this) < key(o)) return -1;
    if (key(o) < key(*this)) return 1;
    return u_.cmp(o.u_);
}

std::string MultChar::str() const {
    std::ostringstream os;
    os << "chi[k=" << k_ << ", u=" << u_.str() << " on " << L_.str() << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// character operations

MultChar restrict_character(const MultChar& chi) {
    const auto& S = chi.session();
    const LocalField& L = chi.field();
    if (L.is_base()) throw ValidationError("character already lives on the base field");
    LocalField F = S->base_field();
    if (L.kind == ExtKind::Unramified) {
        // norm-compatible generators: the residue exponent simply reduces
        return MultChar::build(S, F, chi.tame_exponent() % (S->q() - 1), chi.unram_value());
    }
    // tame ramified: pi_F = delta^{-1} pi_L^d with delta = g^{ram_class}
    long ind_delta = L.ram_class;
    AlgNumber u = chi.unram_value().pow(L.d) * chi.value_on_unit(-ind_delta);
    return MultChar::build(S, F, chi.tame_exponent(), std::move(u));
}

MultChar conjugate_character(const MultChar& chi) {
    const auto& S = chi.session();
    const LocalField& L = chi.field();
    if (L.d != 2) throw ValidationError("conjugation is defined for quadratic extensions only");
    if (L.kind == ExtKind::Unramified) return frobenius_conjugate(chi);
    // c fixes units mod P and sends pi_E to -pi_E
    AlgNumber u = chi.unram_value();
    if (chi.tame_exponent() % 2 != 0) u = -u;
    return MultChar::build(S, L, chi.tame_exponent(), std::move(u));
}

MultChar frobenius_conjugate(const MultChar& chi) {
    const auto& S = chi.session();
    const LocalField& L = chi.field();
    if (L.kind != ExtKind::Unramified) throw ValidationError("Frobenius twist needs an unramified extension");
    return MultChar::build(S, L, chi.tame_exponent() * S->q(), chi.unram_value());
}

MultChar pullback_via_norm(const MultChar& chi, const LocalField& L) {
    const auto& S = chi.session();
    if (!chi.field().is_base()) throw ValidationError("norm pullback starts from a base-field character");
    if (L.is_base()) return chi;
    long k = chi.tame_exponent();
    if (L.kind == ExtKind::Unramified) {
        long qd = S->residue(L).q;
        long knew = (k * ((qd - 1) / (S->q() - 1))) % (qd - 1);
        return MultChar::build(S, L, knew, chi.unram_value().pow(L.d));
    }
    // residue norm is x -> x^d; Nm(pi_L) = (-1)^{d-1} delta pi_F
    long ind_delta = L.ram_class;
    long sgn = (L.d == 2) ? S->residue(S->base_field()).ind_minus_one() : 0;
    AlgNumber u = chi.unram_value() * chi.value_on_unit(ind_delta + sgn);
    return MultChar::build(S, L, (k * L.d) % (S->q() - 1), std::move(u));
}

std::optional<MultChar> extend_character(const MultChar& chi, const LocalField& L) {
    const auto& S = chi.session();
    if (!chi.field().is_base()) throw ValidationError("extension starts from a base-field character");
    if (L.is_base()) return chi;
    if (L.kind == ExtKind::Unramified)
        return MultChar::build(S, L, chi.tame_exponent(), chi.unram_value());
    if (L.d != 2) return std::nullopt;
    // need u_ext with u_ext^2 * chibar(delta^{-1}) = u
    AlgNumber target = chi.unram_value() * chi.value_on_unit(L.ram_class);
    auto root = target.try_sqrt();
    if (!root) return std::nullopt;
    return MultChar::build(S, L, chi.tame_exponent(), *root);
}

MultChar quadratic_class_character(const SessionPtr& S, const LocalField& E) {
    if (E.d != 2) throw ValidationError("quadratic class character needs a quadratic extension");
    LocalField F = S->base_field();
    if (E.kind == ExtKind::Unramified)
        return MultChar::unramified(S, F, S->integer(-1));
    // on units the quadratic residue character; value at pi fixed by
    // omega(-delta pi) = 1
    long q = S->q();
    long k2 = (q - 1) / 2;
    long ind_minus_delta = (q - 1) / 2 + E.ram_class;
    AlgNumber u = (ind_minus_delta * k2) % (q - 1) == 0 ? S->one() : S->integer(-1);
    return MultChar::build(S, F, k2, std::move(u));
}

// ---------------------------------------------------------------------------
// EtaleCubicAlgebra

EtaleCubicAlgebra EtaleCubicAlgebra::split3() { return EtaleCubicAlgebra{CubicShape::Split3, {}, {}}; }

EtaleCubicAlgebra EtaleCubicAlgebra::quad_times_f(LocalField E) {
    if (E.d != 2) throw ValidationError("E x F needs a quadratic extension");
    return EtaleCubicAlgebra{CubicShape::QuadTimesF, E, {}};
}

EtaleCubicAlgebra EtaleCubicAlgebra::cubic_field(LocalField K, std::optional<MultChar> resolvent) {
    if (K.d != 3) throw ValidationError("cubic-field shape needs a cubic extension");
    return EtaleCubicAlgebra{CubicShape::CubicField, K, std::move(resolvent)};
}

std::string EtaleCubicAlgebra::str() const {
    switch (shape) {
        case CubicShape::Split3: return "F x F x F";
        case CubicShape::QuadTimesF: return "E x F with E " + ext->str();
        case CubicShape::CubicField: return "cubic field K, " + ext->str();
    }
    return "?";
}

MultChar discriminant_character(const SessionPtr& S, const EtaleCubicAlgebra& A) {
    switch (A.shape) {
        case CubicShape::Split3:
            return MultChar::trivial(S, S->base_field());
        case CubicShape::QuadTimesF:
            return quadratic_class_character(S, *A.ext);
        case CubicShape::CubicField: {
            const LocalField& K = *A.ext;
            bool galois = (K.kind == ExtKind::Unramified) || ((S->q() - 1) % 3 == 0);
            if (galois) return MultChar::trivial(S, S->base_field());
            if (!A.resolvent)
                throw ValidationError("non-Galois cubic field needs its resolvent character");
            if (!A.resolvent->is_quadratic() || A.resolvent->is_trivial())
                throw ValidationError("resolvent character must be quadratic and nontrivial");
            return *A.resolvent;
        }
    }
    throw InternalFault("unreachable algebra shape");
}

} // namespace asai
