#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asai/algnum.hpp"
#include "asai/errors.hpp"

namespace asai {

// Extension shape of a field over the session base.  Tame ramified
// quadratic/cubic extensions are presented by a uniformizer class
// delta in {1, nonresidue}; both presentations are first-class since
// omega_{E/F} and restriction formulas depend on the class.
enum class ExtKind { None, Unramified, Ramified };

struct LocalField {
    long p = 0;
    long q = 0;       // residue field size of this field
    int d = 1;        // degree over the session base field
    ExtKind kind = ExtKind::None;
    int ram_class = 0; // delta = g^{ram_class}, only meaningful when Ramified

    bool operator==(const LocalField&) const = default;
    bool is_base() const { return d == 1; }
    int residue_degree() const { return kind == ExtKind::Ramified ? 1 : d; }
    std::string str() const;
};

// Explicit model of the residue field F_{p^m}: element codes are
// sum c_i p^i for the coefficient vector of F_p[x]/(modulus).
class FqTable {
public:
    long p = 0;
    int m = 1;
    long q = 0;                  // p^m
    std::vector<long> modulus;   // monic irreducible of degree m (empty for m == 1)
    long gen_code = 0;           // chosen generator of the unit group
    std::vector<long> pow_code;  // g^j -> element code
    std::vector<long> dlog;      // element code -> j (index -1 at 0)
    std::vector<long> trace_gpow; // absolute trace of g^j, in [0, p)

    long ind(long code) const;                // discrete log, throws on 0
    long ind_minus_one() const { return (q - 1) / 2; }
    long mul_code(long a, long b) const;
    long add_code(long a, long b) const;
    long pow_of(long j) const { return pow_code[((j % (q - 1)) + (q - 1)) % (q - 1)]; }
    long trace_of_pow(long j) const { return trace_gpow[((j % (q - 1)) + (q - 1)) % (q - 1)]; }

    // Minimal polynomial over F_p of the element with the given code.
    std::vector<long> min_poly(long code) const;

    static FqTable build(long p, int m);
    // Build so that the norm of the generator down to the subfield of size
    // `sub.q` equals (the embedded image of) sub's generator.
    static FqTable build_compatible(long p, int m, const FqTable& sub);
};

struct SessionConfig {
    long p = 0;
    int f = 1;
    bool quadratic_unramified = false;
    bool quadratic_ramified = false;
    bool cubic_unramified = false;
    bool cubic_ramified = false;
    long extra_torsion = 1; // extra factor forced into the cyclotomic level
    long n_override = 0;    // test hook: use exactly this cyclotomic level
};

// Owns the value domain Q(zeta_N, sqrt q) and the residue-field models for
// one computation session.  Immutable after creation; safe to share.
class Session : public std::enable_shared_from_this<Session> {
public:
    static std::shared_ptr<const Session> create(const SessionConfig& cfg);

    long p() const { return cfg_.p; }
    long q() const { return q_; }
    long level() const { return N_; }
    const std::shared_ptr<const AlgCtx>& ctx() const { return ctx_; }

    LocalField base_field() const;
    LocalField quadratic(ExtKind kind, int ram_class = 0) const;
    LocalField cubic(ExtKind kind, int ram_class = 0) const;

    // Residue-field model of L (degree 1 for ramified extensions).
    const FqTable& residue(const LocalField& L) const;

    bool has_extension(const LocalField& L) const;

    // zeta_p^t
    AlgNumber zeta_p(long t) const;
    // zeta_{q_L - 1}^e as a value of the session field; validates torsion
    AlgNumber zeta_res(const LocalField& L, long e) const;

    AlgNumber one() const { return AlgNumber::one(ctx_); }
    AlgNumber integer(long v) const { return AlgNumber::from_int(ctx_, v); }
    AlgNumber q_half(long m) const { return AlgNumber::q_half_pow(ctx_, m); }
    // q_L^{m/2} for the residue size of L
    AlgNumber q_half_of(const LocalField& L, long m) const;

private:
    explicit Session(const SessionConfig& cfg);
    SessionConfig cfg_;
    long q_ = 0;
    long N_ = 0;
    std::shared_ptr<const AlgCtx> ctx_;
    std::map<int, FqTable> residue_by_degree_;
};

using SessionPtr = std::shared_ptr<const Session>;

// Smooth tame character of L^x: residue exponent k (through the fixed
// generator of the residue field) and the value at the chosen uniformizer.
class MultChar {
public:
    MultChar() = default;

    static MultChar build(SessionPtr S, const LocalField& L, long k, AlgNumber u);
    static MultChar trivial(SessionPtr S, const LocalField& L);
    static MultChar unramified(SessionPtr S, const LocalField& L, AlgNumber u);
    // |.|_L^{n/2}: unramified with value q_L^{-n/2} at the uniformizer
    static MultChar norm_power_half(SessionPtr S, const LocalField& L, long n);

    const SessionPtr& session() const { return S_; }
    const LocalField& field() const { return L_; }
    long tame_exponent() const { return k_; }
    const AlgNumber& unram_value() const { return u_; }

    bool is_trivial() const;
    bool is_unramified() const { return k_ == 0; }
    bool is_quadratic() const; // chi^2 = 1 (includes trivial)
    int conductor_exponent() const { return k_ == 0 ? 0 : 1; }
    bool is_unitary() const { return u_.is_unitary(); }

    AlgNumber value_on_unit(long dlog_exp) const; // chi-bar(g^dlog_exp)
    AlgNumber at_minus_one() const;

    MultChar inverse() const;
    MultChar power(long n) const;
    friend MultChar operator*(const MultChar& a, const MultChar& b);

    bool operator==(const MultChar& o) const { return cmp(o) == 0; }
    bool operator!=(const MultChar& o) const { return cmp(o) != 0; }
    int cmp(const MultChar& o) const;

    std::string str() const;

private:
    SessionPtr S_;
    LocalField L_;
    long k_ = 0;
    AlgNumber u_;
};

// chi restricted to the base field (through the inclusion F^x -> L^x).
MultChar restrict_character(const MultChar& chi);
// Galois conjugate for quadratic extensions.
MultChar conjugate_character(const MultChar& chi);
// Frobenius conjugate chi^phi for unramified extensions (any degree).
MultChar frobenius_conjugate(const MultChar& chi);
// chi o Nm_{L/F} for a character chi of the base field.
MultChar pullback_via_norm(const MultChar& chi, const LocalField& L);
// A tame character of L^x restricting to chi on F^x, when one exists.
std::optional<MultChar> extend_character(const MultChar& chi, const LocalField& L);
// The quadratic character of F^x attached to the quadratic extension E.
MultChar quadratic_class_character(const SessionPtr& S, const LocalField& E);

enum class CubicShape { Split3, QuadTimesF, CubicField };

struct EtaleCubicAlgebra {
    CubicShape shape = CubicShape::Split3;
    std::optional<LocalField> ext;       // E or K
    std::optional<MultChar> resolvent;   // required for non-Galois cubic fields

    static EtaleCubicAlgebra split3();
    static EtaleCubicAlgebra quad_times_f(LocalField E);
    static EtaleCubicAlgebra cubic_field(LocalField K, std::optional<MultChar> resolvent = {});
    std::string str() const;
};

// omega_A: the quadratic character of F^x cut out by disc(A).
MultChar discriminant_character(const SessionPtr& S, const EtaleCubicAlgebra& A);

} // namespace asai
