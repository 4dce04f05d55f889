#include "asai/epsilon.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace asai {

int psi_level(const LocalField& L) {
    if (L.kind == ExtKind::Ramified) return L.d - 1;
    return 0;
}

namespace {

// dlog of the multiplier t in psibar_L(x) = zeta_p^{Tr(t x)}
long psi_multiplier_dlog(const SessionPtr& S, const LocalField& L) {
    if (L.kind != ExtKind::Ramified) return 0;
    // psi_L at level e-1 evaluates through Tr_{L/F}(x pi_L^{-e}) = e x / (delta pi)
    const auto& T = S->residue(S->base_field());
    long e = L.d;
    long t = T.ind(e % S->p());
    long q = S->q();
    return ((t - L.ram_class) % (q - 1) + (q - 1)) % (q - 1);
}

} // namespace

AlgNumber gauss_sum(const SessionPtr& S, const LocalField& L, long k, long t_dlog) {
    const auto& T = S->residue(L);
    long qm = T.q - 1;
    long kk = ((k % qm) + qm) % qm;
    long tt = ((t_dlog % qm) + qm) % qm;

    static std::mutex mu;
    static std::map<std::tuple<long, long, long, long, long>, AlgNumber> memo;
    auto key = std::make_tuple(S->p(), T.q, S->level(), kk, tt);
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    AlgNumber acc = AlgNumber::zero(S->ctx());
    for (long j = 0; j < qm; ++j)
        acc += S->zeta_res(L, kk * j) * S->zeta_p(T.trace_of_pow(j + tt));

    std::lock_guard<std::mutex> lk(mu);
    memo.emplace(key, acc);
    return acc;
}

AlgNumber epsilon_character(const MultChar& chi) {
    const auto& S = chi.session();
    const LocalField& L = chi.field();
    long n = psi_level(L);
    if (chi.is_unramified()) return chi.unram_value().pow(n);

    // the part independent of the uniformizer value is cached
    static std::mutex mu;
    static std::map<std::tuple<long, long, long, long, long>, AlgNumber> core;
    long t = psi_multiplier_dlog(S, L);
    auto key = std::make_tuple(S->p(), S->residue(L).q, S->level(), chi.tame_exponent(), t);
    AlgNumber scaled;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = core.find(key);
        if (it != core.end()) scaled = it->second;
    }
    if (scaled.ctx() == nullptr) {
        scaled = S->q_half_of(L, -1) * gauss_sum(S, L, -chi.tame_exponent(), t);
        std::lock_guard<std::mutex> lk(mu);
        core.emplace(key, scaled);
    }
    return chi.unram_value().pow(1 + n) * scaled;
}

AlgNumber lambda_factor(const SessionPtr& S, const LocalField& L) {
    if (L.is_base()) return S->one();
    std::vector<MultChar> expansion;
    if (L.d == 2) {
        expansion = {MultChar::trivial(S, S->base_field()), quadratic_class_character(S, L)};
    } else if (L.kind == ExtKind::Unramified) {
        // Ind(1_K) = 1 (+) chi_3 (+) chi_3^2 for the unramified cubic characters
        auto chi3 = MultChar::unramified(S, S->base_field(), AlgNumber::root_of_unity(S->ctx(), 1, 3));
        expansion = {MultChar::trivial(S, S->base_field()), chi3, chi3.power(2)};
    } else {
        throw UnsupportedError("lambda factor for a ramified cubic extension is not supported");
    }
    AlgNumber num = S->one();
    for (const auto& c : expansion) num *= epsilon_character(c);
    AlgNumber den = epsilon_character(MultChar::trivial(S, L));
    return num * den.inverse();
}

namespace {

// epsilon of chi (x) sp(n) over the field of chi, with psi_{L}
AlgNumber char_sp_epsilon(const MultChar& chi, int n) {
    const auto& S = chi.session();
    const LocalField& L = chi.field();
    AlgNumber eps = S->one();
    for (int j = 0; j < n; ++j) {
        // semisimplification: chi . nu^{(n-1)/2 - j}
        MultChar shift = MultChar::norm_power_half(S, L, n - 1 - 2 * j);
        eps *= epsilon_character(chi * shift);
    }
    if (n >= 2 && chi.is_unramified()) {
        // det(-q^{-1/2} Frob | V^I / V_N^I): the n-1 eigenvalues above the
        // kernel of the monodromy
        for (int j = 1; j < n; ++j) {
            AlgNumber lam = chi.unram_value() * S->q_half_of(L, 1 - n + 2 * j);
            eps *= -(S->q_half_of(L, -1) * lam);
        }
    }
    return eps;
}

} // namespace

AlgNumber epsilon_wd(const WDRep& rho) {
    const auto& S = rho.session();
    AlgNumber eps = S->one();
    for (const auto& a : rho.atoms()) {
        switch (a.kind) {
            case AtomKind::CharSp:
                eps *= char_sp_epsilon(a.chi, a.n);
                break;
            case AtomKind::IndSp: {
                const LocalField& L = a.chi.field();
                eps *= lambda_factor(S, L).pow(a.n) * char_sp_epsilon(a.chi, a.n);
                break;
            }
            case AtomKind::Opaque:
                if (!a.eps_sign)
                    throw UnsupportedError("opaque atom '" + a.label +
                                           "': supply supercuspidal epsilon data");
                eps *= S->integer(*a.eps_sign);
                break;
        }
    }
    return eps;
}

int epsilon_sign(const AlgNumber& x) {
    if (x.is_one()) return 1;
    if ((-x).is_one()) return -1;
    throw InternalFault("epsilon value is not +-1: not self-dual-normalized (" + x.str() + ")");
}

} // namespace asai
