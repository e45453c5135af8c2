#pragma once

#include "nscat/biword.hpp"
#include "nscat/hecke.hpp"
#include "nscat/laurent.hpp"
#include "nscat/tabloid.hpp"

#include <map>
#include <optional>
#include <vector>

namespace nscat {

// Crystal operators on a single row word (element of B^{1,s}); i in
// {0, 1, ..., ell-1}, absent result encodes the crystal 0.
std::optional<std::vector<int>> f_row(int i, const std::vector<int>& v, int ell);
std::optional<std::vector<int>> e_row(int i, const std::vector<int>& v, int ell);

// eps/phi of a row factor: eps_i = #(i+1)'s, phi_i = #i's, indices mod ell.
std::pair<int, int> eps_phi_row(int i, const std::vector<int>& v, int ell);

// Tensor crystal operators on B^mu: bracket rule for classical i, the
// recursive tensor rule for i = 0.
std::optional<Biword> f_tensor(int i, const Biword& b);
std::optional<Biword> e_tensor(int i, const Biword& b);

// (eps_i, phi_i) computed by repeated application of e/f.
std::pair<int, int> eps_phi(int i, const Biword& b);

Biword e_max(int i, const Biword& b);
Biword e_max(const HeckeElt& w, const Biword& b);

// sigma-twists: add / subtract 1 mod ell letterwise, then sort each factor.
Biword tau_twist(const Biword& b);
Biword tau_inv_twist(const Biword& b);

// Crystal reflection operator S_i (classical i only).
Biword reflection(int i, const Biword& b);

// inv: content <-> shape bijection between B^mu and Tabloids_ell(mu).
Tabloid inv(const Biword& b);
Biword inv(const Tabloid& T, int ell, int p = 0);

// kat': drop the rightmost block, tau^{-1}-twist what remains.
Biword kat_prime(const Biword& b);

// Recording tableau: shape growth of block-by-block column insertion.
Tabloid recording_Q(const Biword& b);

struct DarkCrystal {
    int ell;
    std::vector<int> mu;
    std::vector<HeckeElt> w_list;
    std::vector<Biword> elements;  // sorted, canonical order
};

// B^{mu;w} = F_{w_1}(tau F_{w_2}( ... tau F_{w_p}{b_{mu_p}} (x) b_{mu_{p-1}} ) ... (x) b_{mu_1}).
// dark_with_words expands each F_{w_i} along the supplied word instead of the
// canonical reduced word; the result is word-independent (tested).
DarkCrystal dark(int ell, const std::vector<int>& mu, const std::vector<HeckeElt>& w_list);
DarkCrystal dark_with_words(int ell, const std::vector<int>& mu,
                            const std::vector<HeckeElt>& w_list,
                            const std::vector<std::vector<int>>& words);

// Charge-weighted character: sum of q^{charge(inv(b))} x^{content(b)}.
LaurentPoly char_charge(const DarkCrystal& D);

// Decomposition into gl components, keyed by the recording tableau Q.
std::map<Tabloid, std::vector<Biword>> gl_components(const DarkCrystal& D);

// Whether the f_0-edge at b survives tensoring with the vacuum u_{mu_1 Lambda_0},
// i.e. eps_0(b) >= mu_1; used by the DOT emitter.
bool f0_acts_in_vacuum_tensor(const Biword& b);

}  // namespace nscat
