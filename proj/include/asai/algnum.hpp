#pragma once

#include <gmpxx.h>

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "asai/errors.hpp"

namespace asai {

using Rational = mpq_class;

// Shared data for the cyclotomic field Q(zeta_N).  Elements are stored on the
// power basis 1, z, ..., z^{phi(N)-1} modulo the N-th cyclotomic polynomial,
// so equality is coefficient-wise.  Rows of the reduction table (z^k mod
// Phi_N for k >= phi) are built lazily and cached.
class CycData {
public:
    static std::shared_ptr<const CycData> make(long N);

    long level() const { return N_; }
    long degree() const { return phi_; }

    // z^e mod Phi_N as a coefficient row, e in [0, N).  Thread-safe.
    const std::vector<Rational>& power_row(long e) const;

private:
    explicit CycData(long N);

    long N_ = 0;
    long phi_ = 0;
    std::vector<Rational> minpoly_; // Phi_N, monic, degree phi_
    mutable std::mutex mu_;
    mutable std::deque<std::vector<Rational>> rows_; // rows_[i] = z^{phi_+i} mod Phi_N
};

// Element of Q(zeta_N).
class Cyc {
public:
    Cyc() = default;
    explicit Cyc(std::shared_ptr<const CycData> F);

    static Cyc zero(std::shared_ptr<const CycData> F) { return Cyc(std::move(F)); }
    static Cyc one(std::shared_ptr<const CycData> F);
    static Cyc from_rational(std::shared_ptr<const CycData> F, const Rational& r);
    static Cyc zeta_pow(std::shared_ptr<const CycData> F, long j);

    const std::shared_ptr<const CycData>& field() const { return F_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;              // lies in Q
    std::optional<Rational> as_rational() const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    friend Cyc operator+(Cyc x, const Cyc& y) { return x += y; }
    friend Cyc operator-(Cyc x, const Cyc& y) { return x -= y; }
    friend Cyc operator*(const Cyc& x, const Cyc& y);
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    Cyc& scale(const Rational& r);

    Cyc conj() const;                      // zeta -> zeta^{-1}
    Cyc inverse() const;                   // throws on zero

    bool operator==(const Cyc& o) const { return cmp(o) == 0; }
    bool operator!=(const Cyc& o) const { return cmp(o) != 0; }
    int cmp(const Cyc& o) const;           // deterministic total order

    std::string str() const;

private:
    std::shared_ptr<const CycData> F_;
    std::vector<Rational> c_;              // size phi(N)
};

// The value domain of the library: Q(zeta_N, sqrt q) as pairs (a, b) with
// value a + b*sqrt(q).  When sqrt(q) already lies in Q(zeta_N) — q a perfect
// square, or the level large enough to contain the canonical cyclotomic
// square root — it is folded into the first coordinate and b stays
// identically zero, so equality stays exact and the domain is a field.
struct AlgCtx {
    std::shared_ptr<const CycData> cyc;
    long q = 0;       // residue size of the base field
    long sqrt_q = 0;  // nonzero iff q is a perfect square
    Cyc sqrt_q_cyc;   // canonical cyclotomic sqrt(q) when realized in Q(zeta_N)

    bool folded() const { return sqrt_q != 0 || !sqrt_q_cyc.coeffs().empty(); }

    static std::shared_ptr<const AlgCtx> make(long N, long q);
    // Realizes sqrt(q) inside Q(zeta_N) through the quadratic Gauss sum over
    // F_p (the positive root under the standard embedding).  Requires p | N,
    // and 4 | N when p = 3 mod 4 with q an odd power of p.
    static std::shared_ptr<const AlgCtx> make_with_sqrt(long N, long p, int f);
};

class AlgNumber {
public:
    AlgNumber() = default;

    static AlgNumber zero(std::shared_ptr<const AlgCtx> C);
    static AlgNumber one(std::shared_ptr<const AlgCtx> C);
    static AlgNumber from_rational(std::shared_ptr<const AlgCtx> C, const Rational& r);
    static AlgNumber from_int(std::shared_ptr<const AlgCtx> C, long v);
    static AlgNumber from_cyc(std::shared_ptr<const AlgCtx> C, Cyc a);
    // zeta_N^j
    static AlgNumber zeta_pow(std::shared_ptr<const AlgCtx> C, long j);
    // exp(2 pi i * num/den); requires den | N
    static AlgNumber root_of_unity(std::shared_ptr<const AlgCtx> C, long num, long den);
    // q^{m/2} for any integer m (negative allowed)
    static AlgNumber q_half_pow(std::shared_ptr<const AlgCtx> C, long m);

    const std::shared_ptr<const AlgCtx>& ctx() const { return C_; }
    const Cyc& rat_part() const { return a_; }
    const Cyc& irr_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return b_.is_zero() && a_.is_rational(); }
    std::optional<Rational> as_rational() const;

    AlgNumber operator-() const;
    AlgNumber& operator+=(const AlgNumber& o);
    AlgNumber& operator-=(const AlgNumber& o);
    friend AlgNumber operator+(AlgNumber x, const AlgNumber& y) { return x += y; }
    friend AlgNumber operator-(AlgNumber x, const AlgNumber& y) { return x -= y; }
    friend AlgNumber operator*(const AlgNumber& x, const AlgNumber& y);
    AlgNumber& operator*=(const AlgNumber& o) { return *this = *this * o; }
    friend AlgNumber operator/(const AlgNumber& x, const AlgNumber& y);

    std::optional<AlgNumber> try_inverse() const;  // nullopt if zero or a zero divisor
    AlgNumber inverse() const;                     // throws where try_inverse fails
    AlgNumber pow(long n) const;
    AlgNumber conj() const;                        // complex conjugation
    bool is_unitary() const;                       // x * conj(x) == 1

    // Writes x as r * zeta^j * q^{m/2} if it has that shape, and extracts a
    // square root when one exists in the same field.
    std::optional<AlgNumber> try_sqrt() const;

    bool operator==(const AlgNumber& o) const { return cmp(o) == 0; }
    bool operator!=(const AlgNumber& o) const { return cmp(o) != 0; }
    int cmp(const AlgNumber& o) const;

    std::string str() const;

private:
    std::shared_ptr<const AlgCtx> C_;
    Cyc a_, b_;
};

} // namespace asai
