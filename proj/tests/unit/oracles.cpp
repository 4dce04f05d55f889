#include "oracles.hpp"

#include <gmpxx.h>

namespace asai::oracle {

namespace {

using Mat = std::vector<std::vector<mpq_class>>;

Mat zeros(size_t n) { return Mat(n, std::vector<mpq_class>(n, 0)); }

Mat mul(const Mat& A, const Mat& B) {
    size_t n = A.size();
    Mat C = zeros(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (A[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

size_t rank(Mat A) {
    size_t n = A.size(), r = 0;
    for (size_t col = 0; col < n && r < n; ++col) {
        size_t piv = r;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(A[piv], A[r]);
        for (size_t i = r + 1; i < n; ++i) {
            if (A[i][col] == 0) continue;
            mpq_class f = A[i][col] / A[r][col];
            for (size_t j = col; j < n; ++j) A[i][j] -= f * A[r][j];
        }
        ++r;
    }
    return r;
}

Mat nilpotent_from_blocks(const std::vector<int>& blocks) {
    size_t n = 0;
    for (int b : blocks) n += b;
    Mat N = zeros(n);
    size_t off = 0;
    for (int b : blocks) {
        for (int i = 0; i + 1 < b; ++i) N[off + i][off + i + 1] = 1; // e_{i+1} -> e_i
        off += b;
    }
    return N;
}

} // namespace

std::vector<int> tensor_jordan_partition(const std::vector<int>& blocks_a,
                                         const std::vector<int>& blocks_b) {
    Mat Na = nilpotent_from_blocks(blocks_a);
    Mat Nb = nilpotent_from_blocks(blocks_b);
    size_t da = Na.size(), db = Nb.size(), n = da * db;
    Mat M = zeros(n);
    auto idx = [&](size_t i, size_t j) { return i * db + j; };
    for (size_t i = 0; i < da; ++i)
        for (size_t j = 0; j < db; ++j) {
            for (size_t k = 0; k < da; ++k)
                if (Na[k][i] != 0) M[idx(k, j)][idx(i, j)] += Na[k][i];
            for (size_t k = 0; k < db; ++k)
                if (Nb[k][j] != 0) M[idx(i, k)][idx(i, j)] += Nb[k][j];
        }
    // ranks of powers give the partition
    std::vector<size_t> ranks = {n};
    Mat P = M;
    while (true) {
        size_t r = rank(P);
        ranks.push_back(r);
        if (r == 0) break;
        P = mul(P, M);
    }
    std::vector<int> part;
    for (size_t k = 1; k + 1 <= ranks.size(); ++k) {
        if (k >= ranks.size()) break;
        size_t ge_k = ranks[k - 1] - ranks[k];                       // blocks of size >= k
        size_t ge_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0; // size >= k+1
        for (size_t c = 0; c < ge_k - ge_k1; ++c) part.push_back(static_cast<int>(k));
    }
    std::sort(part.rbegin(), part.rend());
    return part;
}

namespace {

// Observed monomial data of the twisted tensor product, packaged as atoms.
// All exponent arithmetic here is done inline against the group model, so it
// stays independent of restrict/conjugate/pullback in the library.
struct ObservedChar {
    long tame_exp_big;  // exponent of the inertia value in zeta_{qE-1} (unram) / zeta_{q-1} (ram)
    AlgNumber frob_val; // value on the Frobenius-side generator
};

MultChar package_base_char(const SessionPtr& S, const LocalField& E, long inertia_exp,
                           AlgNumber frob_val) {
    long q = S->q();
    LocalField F = S->base_field();
    if (E.kind == ExtKind::Unramified) {
        long qe = q * q;
        // inertia value zeta_{qE-1}^e restricted to the base generator: e must
        // be divisible by q+1, the base exponent is e/(q+1)
        long e = ((inertia_exp % (qe - 1)) + (qe - 1)) % (qe - 1);
        if (e % (q + 1) != 0) throw InternalFault("oracle: inertia value not defined over the base");
        return MultChar::build(S, F, e / (q + 1), std::move(frob_val));
    }
    // ramified: Art_F(pi_F) corresponds to phi sigma^{-ind(-delta)}
    long e = ((inertia_exp % (q - 1)) + (q - 1)) % (q - 1);
    long ind_md = (q - 1) / 2 + E.ram_class;
    AlgNumber u = frob_val * S->zeta_res(F, -e * ind_md);
    return MultChar::build(S, F, e, std::move(u));
}

} // namespace

WDRep tensor_induction_quadratic(const MultChar& alpha, const MultChar& beta) {
    const auto& S = alpha.session();
    const LocalField& E = alpha.field();
    if (!(E == beta.field()) || E.d != 2) throw InternalFault("oracle: need two characters of one quadratic E");
    long q = S->q();
    LocalField F = S->base_field();
    WDRep out(S, F);

    long ka = alpha.tame_exponent(), kb = beta.tame_exponent();
    AlgNumber ua = alpha.unram_value(), ub = beta.unram_value();

    if (E.kind == ExtKind::Unramified) {
        // basis e_i (x) e_j; tau acts by zeta^{k_i + q k_j}; phi swaps with
        // rho(phi^2) on the first slot
        // fixed vectors e_1(x)e_1, e_2(x)e_2 -> base characters
        out.add(WDAtom::char_sp(package_base_char(S, E, ka * (1 + q), ua), 1));
        out.add(WDAtom::char_sp(package_base_char(S, E, kb * (1 + q), ub), 1));
        // swapped pair {e_1(x)e_2, e_2(x)e_1}: induced from mu with
        // mu(tau) = zeta^{k_a + q k_b}, mu(pi_E) = phi^2-scalar = u_a u_b
        long kmu = ((ka + q * kb) % (q * q - 1) + (q * q - 1)) % (q * q - 1);
        out.add(WDAtom::ind_sp(MultChar::build(S, E, kmu, ua * ub), 1));
    } else {
        // sigma is the swap coset; on the fixed vector e_i (x) e_i the value
        // of As(sigma) is chi_i(sigma^2) = zeta^{k_i}, and As(phi) acts by
        // u_i * (-1)^{k_j} u_j on e_i (x) e_j
        auto sign_pow = [&](long k) { return k % 2 == 0 ? S->one() : S->integer(-1); };
        out.add(WDAtom::char_sp(package_base_char(S, E, ka, ua * ua * sign_pow(ka)), 1));
        out.add(WDAtom::char_sp(package_base_char(S, E, kb, ub * ub * sign_pow(kb)), 1));
        long kmu = ((ka + kb) % (q - 1) + (q - 1)) % (q - 1);
        out.add(WDAtom::ind_sp(MultChar::build(S, E, kmu, ua * ub * sign_pow(kb)), 1));
    }
    out.canonicalize();
    return out;
}

WDRep tensor_induction_quadratic_steinberg(const MultChar& chi) {
    const auto& S = chi.session();
    const LocalField& E = chi.field();
    if (E.d != 2) throw InternalFault("oracle: need a character of a quadratic E");
    long q = S->q();
    LocalField F = S->base_field();

    // SL2 acts diagonally: N (x) 1 + 1 (x) N on std (x) std has Jordan type
    // [3, 1], computed honestly from matrices
    auto part = tensor_jordan_partition({2}, {2});
    if (!(part.size() == 2 && part[0] == 3 && part[1] == 1))
        throw InternalFault("oracle: unexpected Jordan type for std (x) std");

    // W-part: transfer(chi) times the swap permutation representation;
    // the swap fixes Sym^2 (the sp(3) block) and acts by -1 on the exterior
    // line, which is the class character of E/F
    long k = chi.tame_exponent();
    AlgNumber u = chi.unram_value();
    MultChar transfer = [&] {
        if (E.kind == ExtKind::Unramified) return package_base_char(S, E, k * (1 + q), u);
        AlgNumber sgn = k % 2 == 0 ? S->one() : S->integer(-1);
        return package_base_char(S, E, k, u * u * sgn);
    }();
    MultChar sign_char = [&] {
        if (E.kind == ExtKind::Unramified) return MultChar::unramified(S, F, S->integer(-1));
        long ind_md = (q - 1) / 2 + E.ram_class;
        AlgNumber u0 = ind_md % 2 == 0 ? S->one() : S->integer(-1);
        return MultChar::build(S, F, (q - 1) / 2, std::move(u0));
    }();

    WDRep out(S, F);
    out.add(WDAtom::char_sp(transfer, 3));
    out.add(WDAtom::char_sp(transfer * sign_char, 1));
    out.canonicalize();
    return out;
}

} // namespace asai::oracle
