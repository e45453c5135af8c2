#pragma once

#include "nscat/catalan.hpp"

#include <map>
#include <vector>

namespace nscat {

// t=0 nonsymmetric Macdonald polynomials tE_alpha, memoized per context.
class TEContext {
public:
    explicit TEContext(int ell) : ell_(ell) {}
    const LaurentPoly& tE(const ExpVec& alpha);
    void clear() { memo_.clear(); }

private:
    int ell_;
    std::map<ExpVec, LaurentPoly> memo_;
};

// Knop-Sahi recursion at t=0 (fresh context per call).
LaurentPoly tE(const ExpVec& alpha);

// Sanderson operator formula pi_z (x1 Phi pi_{c(eta_k)})^{eta_k} ... ; any z
// with z.alpha^+ = alpha works, the canonical choice is p(alpha).
LaurentPoly tE_sanderson(const ExpVec& alpha);
LaurentPoly tE_sanderson_z(const ExpVec& alpha, const HeckeElt& z);

// Catalan realization H(Delta'_ell(eta); 1^m 0^{ell-m}; p~(alpha)), with the
// x_{ell+1} = ... = x_m = 0 specialization when m = |alpha| > ell.
LaurentPoly tE_catalan(const ExpVec& alpha);

// E_alpha(x; q, 0) = q^{sum_i C(alpha_i, 2)} tE_alpha(x; 1/q).
LaurentPoly E_from_tE(const ExpVec& alpha);

struct SymmetrizeResult {
    LaurentPoly lhs;          // pi_{w0} tE_alpha
    LaurentPoly rhs_catalan;  // H(Delta_ell(eta); mu; w0) (specialized if m > ell)
    LaurentPoly rhs_tableaux; // charge-weighted katabolizable-SYT Schur sum
    SchurExpansion schur;
    bool ok;

    SymmetrizeResult() : lhs(1), rhs_catalan(1), rhs_tableaux(1), ok(false) {}
};

SymmetrizeResult symmetrize_check(const ExpVec& alpha);

// tE_{(beta,0)}(x_1..x_{ell+1})|_{x_{ell+1}=0} == tE_beta(x_1..x_ell)
bool stability_check(const ExpVec& beta, int ell);

// conjugate of the sorted rearrangement, eta = (alpha^+)'.
std::vector<int> conjugate_sorted(const ExpVec& alpha);

}  // namespace nscat
