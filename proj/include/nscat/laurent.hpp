#pragma once

#include "nscat/hecke.hpp"
#include "nscat/qpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace nscat {

using ExpVec = std::vector<int>;

// Exact multivariate Laurent polynomial in x_1..x_ell over Z[q, q^{-1}].
class LaurentPoly {
public:
    explicit LaurentPoly(int ell);

    static LaurentPoly zero(int ell) { return LaurentPoly(ell); }
    static LaurentPoly one(int ell);
    static LaurentPoly monomial(ExpVec exp, QPoly c = QPoly(1));

    int ell() const { return ell_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, QPoly>& terms() const { return terms_; }
    QPoly coeff(const ExpVec& e) const;
    size_t term_count() const { return terms_.size(); }

    void add_term(const ExpVec& e, const QPoly& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const QPoly& c) const;
    LaurentPoly mul_monomial(const ExpVec& e, const QPoly& c = QPoly(1)) const;
    LaurentPoly mul_x_power(int var, int a) const;  // * x_var^a (1-based var)

    bool operator==(const LaurentPoly& o) const {
        return ell_ == o.ell_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    QPoly eval_x_one() const;  // substitute x_i = 1 for all i
    int min_q_exp() const;     // over all coefficients; requires nonzero

    // Substitute x_{keep+1} = ... = x_ell = 0 and reinterpret in keep variables.
    // Requires all exponents in the killed variables to be nonnegative.
    LaurentPoly kill_vars_above(int keep) const;

    // Same polynomial viewed in a larger variable set (new exponents 0).
    LaurentPoly extended(int new_ell) const;

    // Terms sorted by q-exponent ascending, then exponent vector lex descending.
    std::vector<std::tuple<int, ExpVec, Int>> sorted_terms() const;
    std::string to_string() const;

private:
    int ell_;
    std::map<ExpVec, QPoly> terms_;  // exponent vector -> nonzero QPoly
};

// x_i <-> x_{i+1} in every monomial
LaurentPoly s_act(int i, const LaurentPoly& f);

// Demazure operator pi_i(f) = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}),
// computed by the monomial-wise geometric-sum closed form.
LaurentPoly pi(int i, const LaurentPoly& f);

// pi_hat_i = pi_i - 1
LaurentPoly pi_hat(int i, const LaurentPoly& f);

LaurentPoly pi_word(const std::vector<int>& word, LaurentPoly f);
LaurentPoly pi_hat_word(const std::vector<int>& word, LaurentPoly f);

inline LaurentPoly pi_w(const HeckeElt& w, const LaurentPoly& f) {
    return pi_word(w.reduced_word(), f);
}

// Rotation homomorphism: x_i -> x_{i+1} for i < ell, x_ell -> q x_1.
LaurentPoly phi(const LaurentPoly& f);

}  // namespace nscat
