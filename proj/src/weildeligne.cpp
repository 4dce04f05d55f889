#include "asai/weildeligne.hpp"

#include <algorithm>
#include <sstream>

namespace asai {

WDAtom WDAtom::char_sp(MultChar chi, int n) {
    if (n < 1) throw ValidationError("sp size must be at least 1");
    WDAtom a;
    a.kind = AtomKind::CharSp;
    a.chi = std::move(chi);
    a.n = n;
    return a;
}

WDAtom WDAtom::ind_sp(MultChar chi_ext, int n) {
    if (n < 1) throw ValidationError("sp size must be at least 1");
    if (chi_ext.field().is_base()) throw ValidationError("induced atom needs a character of an extension");
    WDAtom a;
    a.kind = AtomKind::IndSp;
    a.chi = std::move(chi_ext);
    a.n = n;
    return a;
}

WDAtom WDAtom::opaque(std::string label, int dim, std::optional<MultChar> det,
                      std::optional<int> eps_sign) {
    if (dim < 2) throw ValidationError("opaque atoms have dimension at least 2");
    if (eps_sign && *eps_sign != 1 && *eps_sign != -1)
        throw ValidationError("opaque epsilon sign must be +1 or -1");
    WDAtom a;
    a.kind = AtomKind::Opaque;
    a.label = std::move(label);
    a.opaque_dim = dim;
    a.det = std::move(det);
    a.eps_sign = eps_sign;
    return a;
}

int WDAtom::dim() const {
    switch (kind) {
        case AtomKind::CharSp: return n;
        case AtomKind::IndSp: return chi.field().d * n;
        case AtomKind::Opaque: return opaque_dim;
    }
    return 0;
}

int WDAtom::cmp(const WDAtom& o) const {
    if (kind != o.kind) return kind < o.kind ? -1 : 1;
    if (kind == AtomKind::Opaque) {
        if (label != o.label) return label < o.label ? -1 : 1;
        if (opaque_dim != o.opaque_dim) return opaque_dim < o.opaque_dim ? -1 : 1;
        return 0;
    }
    if (n != o.n) return n < o.n ? -1 : 1;
    return chi.cmp(o.chi);
}

std::string WDAtom::str() const {
    std::ostringstream os;
    switch (kind) {
        case AtomKind::CharSp:
            if (n == 1) os << chi.str();
            else os << chi.str() << " (x) sp(" << n << ")";
            break;
        case AtomKind::IndSp:
            os << "Ind[" << chi.str() << "]";
            if (n > 1) os << " (x) sp(" << n << ")";
            break;
        case AtomKind::Opaque:
            os << "opaque[" << label << ", dim " << opaque_dim << "]";
            break;
    }
    return os.str();
}

int WDRep::dim() const {
    int d = 0;
    for (const auto& a : atoms_) d += a.dim();
    return d;
}

bool WDRep::has_opaque() const {
    return std::any_of(atoms_.begin(), atoms_.end(),
                       [](const WDAtom& a) { return a.kind == AtomKind::Opaque; });
}

void WDRep::add(WDAtom a) {
    if (a.kind == AtomKind::CharSp && !(a.chi.field() == base_))
        throw ValidationError("character atom lives on the wrong field");
    if (a.kind == AtomKind::IndSp && !base_.is_base())
        throw ValidationError("induced atoms only occur over the base field");
    atoms_.push_back(std::move(a));
}

namespace {

// Ind(mu) and Ind(mu^conj) are isomorphic; keep the smaller label.
MultChar induced_canonical(const MultChar& mu) {
    MultChar best = mu;
    const LocalField& L = mu.field();
    if (L.kind == ExtKind::Unramified) {
        MultChar c = mu;
        for (int i = 1; i < L.d; ++i) {
            c = frobenius_conjugate(c);
            if (c.cmp(best) < 0) best = c;
        }
    } else if (L.d == 2) {
        MultChar c = conjugate_character(mu);
        if (c.cmp(best) < 0) best = c;
    }
    return best;
}

} // namespace

void WDRep::canonicalize() {
    for (auto& a : atoms_)
        if (a.kind == AtomKind::IndSp) a.chi = induced_canonical(a.chi);
    std::sort(atoms_.begin(), atoms_.end(), [](const WDAtom& x, const WDAtom& y) { return x.cmp(y) < 0; });
}

bool WDRep::operator==(const WDRep& o) const {
    if (!(base_ == o.base_) || atoms_.size() != o.atoms_.size()) return false;
    WDRep a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    for (size_t i = 0; i < a.atoms_.size(); ++i)
        if (a.atoms_[i].cmp(b.atoms_[i]) != 0) return false;
    return true;
}

std::string WDRep::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& a : atoms_) {
        if (!first) os << " (+) ";
        first = false;
        os << a.str();
    }
    if (first) os << "0";
    return os.str();
}

WDRep special_rep(const SessionPtr& S, const LocalField& L, int n) {
    WDRep r(S, L);
    r.add(WDAtom::char_sp(MultChar::trivial(S, L), n));
    return r;
}

WDRep char_rep(const MultChar& chi) { return char_sp_rep(chi, 1); }

WDRep char_sp_rep(const MultChar& chi, int n) {
    WDRep r(chi.session(), chi.field());
    r.add(WDAtom::char_sp(chi, n));
    return r;
}

WDRep wd_sum(const WDRep& a, const WDRep& b) {
    if (!(a.base() == b.base())) throw ValidationError("direct sum of representations over different fields");
    WDRep r(a.session(), a.base());
    for (const auto& x : a.atoms()) r.add(x);
    for (const auto& x : b.atoms()) r.add(x);
    r.canonicalize();
    return r;
}

namespace {

std::vector<int> clebsch_gordan(int m, int n) {
    std::vector<int> parts;
    for (int k = 0; k < std::min(m, n); ++k) parts.push_back(m + n - 1 - 2 * k);
    return parts;
}

std::vector<MultChar> conjugate_orbit(const MultChar& mu) {
    const LocalField& L = mu.field();
    std::vector<MultChar> orb = {mu};
    if (L.kind == ExtKind::Unramified) {
        MultChar c = mu;
        for (int i = 1; i < L.d; ++i) {
            c = frobenius_conjugate(c);
            orb.push_back(c);
        }
    } else if (L.d == 2) {
        orb.push_back(conjugate_character(mu));
    } else {
        throw UnsupportedError("Mackey expansion over a ramified cubic extension is not supported");
    }
    return orb;
}

} // namespace

WDRep wd_tensor(const WDRep& a, const WDRep& b) {
    if (!(a.base() == b.base())) throw ValidationError("tensor of representations over different fields");
    if (a.has_opaque() || b.has_opaque())
        throw UnsupportedError("tensor with an opaque atom: structural path required");
    WDRep r(a.session(), a.base());
    for (const auto& x : a.atoms()) {
        for (const auto& y : b.atoms()) {
            auto cg = clebsch_gordan(x.n, y.n);
            if (x.kind == AtomKind::CharSp && y.kind == AtomKind::CharSp) {
                MultChar prod = x.chi * y.chi;
                for (int l : cg) r.add(WDAtom::char_sp(prod, l));
            } else if (x.kind == AtomKind::IndSp && y.kind == AtomKind::CharSp) {
                MultChar prod = x.chi * pullback_via_norm(y.chi, x.chi.field());
                for (int l : cg) r.add(WDAtom::ind_sp(prod, l));
            } else if (x.kind == AtomKind::CharSp && y.kind == AtomKind::IndSp) {
                MultChar prod = y.chi * pullback_via_norm(x.chi, y.chi.field());
                for (int l : cg) r.add(WDAtom::ind_sp(prod, l));
            } else {
                if (!(x.chi.field() == y.chi.field()))
                    throw UnsupportedError("tensor of inductions from different extensions");
                for (const auto& c : conjugate_orbit(y.chi))
                    for (int l : cg) r.add(WDAtom::ind_sp(x.chi * c, l));
            }
        }
    }
    r.canonicalize();
    return r;
}

WDRep wd_dual(const WDRep& rho) {
    WDRep r(rho.session(), rho.base());
    for (const auto& a : rho.atoms()) {
        switch (a.kind) {
            case AtomKind::CharSp: r.add(WDAtom::char_sp(a.chi.inverse(), a.n)); break;
            case AtomKind::IndSp: r.add(WDAtom::ind_sp(a.chi.inverse(), a.n)); break;
            case AtomKind::Opaque: {
                std::optional<MultChar> det;
                std::optional<int> eps = a.eps_sign;
                if (a.det) {
                    det = a.det->inverse();
                    if (!a.det->is_trivial()) eps.reset(); // sign of the dual is not determined
                }
                r.add(WDAtom::opaque(a.label, a.opaque_dim, std::move(det), eps));
                break;
            }
        }
    }
    r.canonicalize();
    return r;
}

MultChar wd_det(const WDRep& rho) {
    MultChar det = MultChar::trivial(rho.session(), rho.base());
    for (const auto& a : rho.atoms()) {
        switch (a.kind) {
            case AtomKind::CharSp:
                det = det * a.chi.power(a.n); // the sp eigenvalue shifts cancel in pairs
                break;
            case AtomKind::IndSp: {
                const LocalField& L = a.chi.field();
                MultChar w = L.d == 2 ? quadratic_class_character(rho.session(), L)
                                      : discriminant_character(rho.session(),
                                                               EtaleCubicAlgebra::cubic_field(L));
                det = det * (w * restrict_character(a.chi)).power(a.n);
                break;
            }
            case AtomKind::Opaque:
                if (!a.det) throw UnsupportedError("opaque atom without its determinant");
                det = det * *a.det;
                break;
        }
    }
    return det;
}

WDRep wd_twist(const WDRep& rho, const MultChar& chi) {
    if (!(chi.field() == rho.base())) throw ValidationError("twist by a character of the wrong field");
    WDRep r(rho.session(), rho.base());
    for (const auto& a : rho.atoms()) {
        switch (a.kind) {
            case AtomKind::CharSp: r.add(WDAtom::char_sp(a.chi * chi, a.n)); break;
            case AtomKind::IndSp:
                r.add(WDAtom::ind_sp(a.chi * pullback_via_norm(chi, a.chi.field()), a.n));
                break;
            case AtomKind::Opaque:
                throw UnsupportedError("twist of an opaque atom: structural path required");
        }
    }
    r.canonicalize();
    return r;
}

WDRep wd_expand_split_induced(const WDRep& rho) {
    const auto& S = rho.session();
    WDRep r(S, rho.base());
    for (const auto& a : rho.atoms()) {
        if (a.kind != AtomKind::IndSp) {
            r.add(a);
            continue;
        }
        const LocalField& L = a.chi.field();
        bool invariant = false;
        if (L.d == 2) invariant = conjugate_character(a.chi) == a.chi;
        if (!invariant) {
            r.add(a);
            continue;
        }
        long k = a.chi.tame_exponent();
        long q = S->q();
        std::optional<MultChar> kappa;
        if (L.kind == ExtKind::Unramified) {
            if (k % (q + 1) == 0) {
                auto root = a.chi.unram_value().try_sqrt();
                if (root) kappa = MultChar::build(S, S->base_field(), k / (q + 1), *root);
            }
        } else {
            if (k % 2 == 0) {
                long kk = k / 2;
                // u_mu = u_kappa * kappabar(-delta)
                long ind_md = (q - 1) / 2 + L.ram_class;
                AlgNumber u = a.chi.unram_value() * S->zeta_res(S->base_field(), -kk * ind_md);
                kappa = MultChar::build(S, S->base_field(), kk, std::move(u));
            }
        }
        if (!kappa) {
            r.add(a); // no exact splitting available; the formal atom stays correct
            continue;
        }
        MultChar w = quadratic_class_character(S, L);
        r.add(WDAtom::char_sp(*kappa, a.n));
        r.add(WDAtom::char_sp(*kappa * w, a.n));
    }
    r.canonicalize();
    return r;
}

std::vector<AlgNumber> frobenius_charpoly(const WDRep& rho) {
    const auto& S = rho.session();
    std::vector<AlgNumber> poly = {S->one()};
    auto mul_factor = [&](const AlgNumber& lambda, int deg) {
        // poly *= (1 - lambda X^deg)
        std::vector<AlgNumber> next(poly.size() + deg, AlgNumber::zero(S->ctx()));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + deg] -= poly[i] * lambda;
        }
        poly = std::move(next);
    };
    for (const auto& a : rho.atoms()) {
        if (a.kind == AtomKind::Opaque) throw UnsupportedError("opaque atom has no explicit eigenvalues");
        if (!a.chi.is_unramified())
            throw UnsupportedError("Frobenius characteristic polynomial needs unramified atoms");
        const LocalField& L = a.chi.field();
        for (int j = 0; j < a.n; ++j) {
            // sp(n) shifts the eigenvalue by q_F^{(1-n)/2 + j}
            AlgNumber shift = S->q_half(1 - a.n + 2 * j);
            if (a.kind == AtomKind::CharSp) {
                mul_factor(a.chi.unram_value() * shift, 1);
            } else {
                // Ind(mu) contributes 1 - mu(pi_L) X^d per sp line, with the
                // sp shift restricted to L
                AlgNumber shift_L = S->q_half_of(L, 1 - a.n + 2 * j);
                mul_factor(a.chi.unram_value() * shift_L, L.d);
            }
        }
    }
    return poly;
}

} // namespace asai
