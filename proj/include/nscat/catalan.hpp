#pragma once

#include "nscat/keybasis.hpp"
#include "nscat/rootideal.hpp"

#include <map>
#include <optional>
#include <utility>

namespace nscat {

// Schur expansion: (q-exponent, partition lambda) -> coefficient.
using SchurExpansion = std::map<std::pair<int, std::vector<int>>, Int>;

// H(Psi; gamma; w) by the removable-root recursion (Psi and gamma branches,
// tail-sum pruning, memoized on (nr, gamma); pi_w applied once at top level).
LaurentPoly catalan_recursive(const RootIdeal& psi, const ExpVec& gamma, const HeckeElt& w);

// H(Psi; gamma; w) by the rotation operator word; requires a tame triple and
// gamma >= 0.
LaurentPoly catalan_rotation(const RootIdeal& psi, const ExpVec& gamma, const HeckeElt& w);

enum class CatalanRoute { recursion, rotation };

struct CatalanResult {
    LaurentPoly poly;
    KeyExpansion key_expansion;
    std::optional<SchurExpansion> schur_expansion;  // present when w = w0

    CatalanResult() : poly(1) {}
};

CatalanResult catalan_full(const RootIdeal& psi, const ExpVec& gamma, const HeckeElt& w,
                           CatalanRoute route = CatalanRoute::recursion);

// k-Schur Catalan function H(Delta^k(mu); mu; w0).
CatalanResult kschur(const std::vector<int>& mu, int k);

// Kostka-Foulkes polynomial via the q-analog of Kostant's partition function.
QPoly kostka_foulkes_qkostant(std::vector<int> lambda, std::vector<int> mu, int ell);

struct NStats {
    long n;       // n(mu) = sum (i-1) mu_i
    long nl_num;  // n_ell(mu) as a reduced fraction
    long nl_den;
};
NStats n_stats(const std::vector<int>& mu, int ell);

// For symmetric input (every alpha weakly increasing): kappa -> Schur.
SchurExpansion schur_from_key(const KeyExpansion& ke);

}  // namespace nscat
