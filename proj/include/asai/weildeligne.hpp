#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asai/localfield.hpp"

namespace asai {

// Atoms of a Frobenius-semisimple Weil-Deligne representation:
//   CharSp: chi tensor sp(n) over the atom's own field,
//   IndSp:  Ind_{L/F}(chi_L) tensor sp(n)_F (n = 1 is a plain induced atom),
//   Opaque: an irreducible piece known only through supplied invariants.
enum class AtomKind { CharSp, IndSp, Opaque };

struct WDAtom {
    AtomKind kind = AtomKind::CharSp;
    MultChar chi;  // CharSp: character of the atom's field; IndSp: character of the extension
    int n = 1;     // sp-part size

    std::string label;            // Opaque
    int opaque_dim = 0;           // Opaque
    std::optional<MultChar> det;  // Opaque
    std::optional<int> eps_sign;  // Opaque, +-1

    static WDAtom char_sp(MultChar chi, int n);
    static WDAtom ind_sp(MultChar chi_ext, int n);
    static WDAtom opaque(std::string label, int dim, std::optional<MultChar> det,
                         std::optional<int> eps_sign);

    int dim() const;
    int cmp(const WDAtom& o) const;
    std::string str() const;
};

class WDRep {
public:
    WDRep() = default;
    WDRep(SessionPtr S, LocalField base) : S_(std::move(S)), base_(base) {}

    const SessionPtr& session() const { return S_; }
    const LocalField& base() const { return base_; }
    const std::vector<WDAtom>& atoms() const { return atoms_; }

    int dim() const;
    bool has_opaque() const;
    void add(WDAtom a);
    void canonicalize();

    bool operator==(const WDRep& o) const;
    std::string str() const;

private:
    SessionPtr S_;
    LocalField base_;
    std::vector<WDAtom> atoms_;
};

// The n-dimensional special representation sp(n) over the given field.
WDRep special_rep(const SessionPtr& S, const LocalField& L, int n);
// chi itself as a 1-dimensional representation.
WDRep char_rep(const MultChar& chi);
// chi tensor sp(n).
WDRep char_sp_rep(const MultChar& chi, int n);

WDRep wd_sum(const WDRep& a, const WDRep& b);
WDRep wd_tensor(const WDRep& a, const WDRep& b);
WDRep wd_dual(const WDRep& rho);
MultChar wd_det(const WDRep& rho);
// Twist every atom by a character of the representation's own field.
WDRep wd_twist(const WDRep& rho, const MultChar& chi);

// Replace induced atoms whose character is conjugation-invariant by the pair
// of base-field constituents, when the splitting is computable exactly.
WDRep wd_expand_split_induced(const WDRep& rho);

// det(1 - Frobenius X) as a coefficient list; requires every atom unramified.
std::vector<AlgNumber> frobenius_charpoly(const WDRep& rho);

} // namespace asai
