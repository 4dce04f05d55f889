#include "asai/zeta.hpp"

#include "asai/epsilon.hpp"

namespace asai {

SatakeData SatakeData::make(SessionPtr S, AlgNumber a, AlgNumber b) {
    if (a.is_zero() || b.is_zero()) throw ValidationError("Satake parameters must be nonzero");
    SatakeData sd;
    sd.E = S->quadratic(ExtKind::Unramified);
    sd.S = std::move(S);
    sd.a = std::move(a);
    sd.b = std::move(b);
    return sd;
}

AlgNumber whittaker_value(const SatakeData& sd, long n) {
    if (n < 0) return AlgNumber::zero(sd.S->ctx());
    AlgNumber scale = sd.S->q_half_of(sd.E, -n);
    if (sd.a == sd.b) return sd.S->integer(n + 1) * sd.a.pow(n) * scale;
    AlgNumber num = sd.a.pow(n + 1) - sd.b.pow(n + 1);
    return scale * num * (sd.a - sd.b).inverse();
}

TruncatedSeries zeta_series(const SatakeData& sd, int M) {
    if (M < 1) throw ValidationError("series order must be at least 1");
    TruncatedSeries ts;
    ts.sd = sd;
    ts.coeffs.assign(M + 1, AlgNumber::zero(sd.S->ctx()));
    AlgNumber ab = sd.a * sd.b;
    // h = diag(pi^{j}, pi^{n}), m = j - n >= 0 from the Whittaker support,
    // n >= 0 from Phi, delta^{-1} contributes q^m, |det|^s gives X^{m+2n}
    for (int m = 0; m <= M; ++m) {
        AlgNumber wm = whittaker_value(sd, m) * sd.S->q_half(2 * m);
        for (int n = 0; m + 2 * n <= M; ++n) ts.coeffs[m + 2 * n] += wm * ab.pow(n);
    }
    return ts;
}

std::optional<std::vector<AlgNumber>> pade_denominator(const std::vector<AlgNumber>& c, int max_deg) {
    if (c.empty()) return std::nullopt;
    auto ctx = c[0].ctx();
    long M = static_cast<long>(c.size()) - 1;
    for (int k = 0; k <= max_deg; ++k) {
        // unknowns d_1..d_k from the first k relations; then verify all
        std::vector<std::vector<AlgNumber>> A(k, std::vector<AlgNumber>(k + 1, AlgNumber::zero(ctx)));
        for (int t = 1; t <= k; ++t) {
            for (int i = 1; i <= k; ++i)
                if (t - i >= 0) A[t - 1][i - 1] = c[t - i];
            A[t - 1][k] = -c[t];
        }
        std::vector<AlgNumber> d(k, AlgNumber::zero(ctx));
        bool solved = true;
        // Gaussian elimination with invertible-pivot search
        for (int col = 0; col < k && solved; ++col) {
            int piv = -1;
            for (int row = col; row < k; ++row)
                if (A[row][col].try_inverse()) {
                    piv = row;
                    break;
                }
            if (piv < 0) {
                solved = false;
                break;
            }
            std::swap(A[col], A[piv]);
            AlgNumber inv = A[col][col].inverse();
            for (int j = col; j <= k; ++j) A[col][j] = A[col][j] * inv;
            for (int row = 0; row < k; ++row) {
                if (row == col || A[row][col].is_zero()) continue;
                AlgNumber f = A[row][col];
                for (int j = col; j <= k; ++j) A[row][j] = A[row][j] - f * A[col][j];
            }
        }
        if (solved) {
            for (int i = 0; i < k; ++i) d[i] = A[i][k];
        } else {
            continue;
        }
        // verify: sum_{i=0..k} d_i c_{t-i} = [t == 0] for all t <= M
        bool ok = true;
        for (long t = 0; t <= M && ok; ++t) {
            AlgNumber s = c[t];
            for (int i = 1; i <= k && i <= t; ++i) s += d[i - 1] * c[t - i];
            if (t == 0) ok = s.is_one();
            else ok = s.is_zero();
        }
        if (!ok) continue;
        std::vector<AlgNumber> den = {AlgNumber::one(ctx)};
        for (int i = 0; i < k; ++i) den.push_back(d[i]);
        return den;
    }
    return std::nullopt;
}

std::vector<AlgNumber> asai_charpoly(const SatakeData& sd) {
    WDRep rho(sd.S, sd.E);
    rho.add(WDAtom::char_sp(MultChar::unramified(sd.S, sd.E, sd.a), 1));
    rho.add(WDAtom::char_sp(MultChar::unramified(sd.S, sd.E, sd.b), 1));
    return frobenius_charpoly(asai_quadratic(rho));
}

LFactor reconstruct_L_factor(const TruncatedSeries& ts, int max_deg) {
    if (static_cast<int>(ts.coeffs.size()) - 1 < 2 * max_deg + 2)
        throw ValidationError("series too short: need M >= 2 max_deg + 2");
    auto den = pade_denominator(ts.coeffs, max_deg);
    if (!den)
        throw InternalFault(
            "no consistent L-factor reconstruction: measure or normalization bug upstream");
    // cross-check against the Asai parameter
    auto expect = asai_charpoly(ts.sd);
    if (expect.size() > den->size()) throw InternalFault("reconstructed degree too small");
    for (size_t i = 0; i < expect.size(); ++i)
        if (!((*den)[i] == expect[i]))
            throw InternalFault("reconstructed L-factor disagrees with the Asai parameter");
    for (size_t i = expect.size(); i < den->size(); ++i)
        if (!(*den)[i].is_zero()) throw InternalFault("reconstructed L-factor has extra roots");
    return LFactor{*den};
}

} // namespace asai
