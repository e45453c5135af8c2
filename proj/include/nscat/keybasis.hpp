#pragma once

#include "nscat/laurent.hpp"

#include <map>
#include <string>
#include <utility>

namespace nscat {

// Expansion of a Laurent polynomial in the key basis: (q-exponent, alpha) -> coeff.
struct KeyExpansion {
    int ell = 0;
    std::map<std::pair<int, ExpVec>, Int> terms;

    LaurentPoly reconstruct() const;
    bool operator==(const KeyExpansion& o) const {
        return ell == o.ell && terms == o.terms;
    }
    std::string to_string() const;
};

// Key polynomial kappa_alpha = pi_{p(alpha)} x^{alpha^+}.
LaurentPoly key(const ExpVec& alpha);

// Demazure atom: pi_hat folded along the canonical word of p(alpha).
LaurentPoly atom(const ExpVec& alpha);

// Unique key expansion by greedy triangular extraction per q-power and
// homogeneous x-degree; Laurent inputs are shifted to the nonnegative
// orthant via (x_1...x_ell)^d kappa_alpha = kappa_{alpha + (d,...,d)}.
KeyExpansion expand_keys(const LaurentPoly& f);

// Drop key terms indexed outside Z_{>=0}^ell and reconstruct.
LaurentPoly poly_trunc(const LaurentPoly& f);

// Fu-Lascoux constant-term coefficient of kappa_alpha in f; desk-scale oracle.
QPoly key_coeff_ct_oracle(const LaurentPoly& f, const ExpVec& alpha);

}  // namespace nscat
