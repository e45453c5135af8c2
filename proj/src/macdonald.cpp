#include "nscat/macdonald.hpp"

#include "nscat/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nscat {

std::vector<int> conjugate_sorted(const ExpVec& alpha) {
    std::vector<int> sorted = alpha;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::vector<int> eta;
    for (int i = 1; !sorted.empty() && i <= sorted[0]; ++i) {
        int cnt = 0;
        for (int a : sorted)
            if (a >= i) ++cnt;
        eta.push_back(cnt);
    }
    return eta;
}

const LaurentPoly& TEContext::tE(const ExpVec& alpha) {
    if (static_cast<int>(alpha.size()) != ell_)
        throw std::invalid_argument("tE: alpha length != ell");
    for (int a : alpha)
        if (a < 0) throw std::invalid_argument("tE: negative entry");
    if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;
    LaurentPoly result(ell_);
    if (std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; })) {
        result = LaurentPoly::one(ell_);
    } else {
        int asc = 0;
        for (int i = 1; i < ell_; ++i)
            if (alpha[i - 1] < alpha[i]) { asc = i; break; }
        if (asc) {
            ExpVec swapped = alpha;
            std::swap(swapped[asc - 1], swapped[asc]);
            result = pi(asc, tE(swapped));
        } else {
            // alpha weakly decreasing, alpha_1 >= 1
            ExpVec prev(alpha.begin() + 1, alpha.end());
            prev.push_back(alpha[0] - 1);
            result = phi(tE(prev)).mul_x_power(1, 1);
        }
    }
    return memo_.emplace(alpha, std::move(result)).first->second;
}

LaurentPoly tE(const ExpVec& alpha) {
    TEContext ctx(static_cast<int>(alpha.size()));
    return ctx.tE(alpha);
}

LaurentPoly tE_sanderson_z(const ExpVec& alpha, const HeckeElt& z) {
    int ell = static_cast<int>(alpha.size());
    if (z.ell() != ell) throw std::invalid_argument("tE_sanderson: mismatched ell");
    auto eta = conjugate_sorted(alpha);
    LaurentPoly f = LaurentPoly::one(ell);
    for (int part : eta) {  // eta_1 group is rightmost in the operator word
        for (int rep = 0; rep < part; ++rep) {
            f = pi_w(HeckeElt::c_elt(ell, part), f);
            f = phi(f);
            f = f.mul_x_power(1, 1);
        }
    }
    return pi_w(z, f);
}

LaurentPoly tE_sanderson(const ExpVec& alpha) {
    return tE_sanderson_z(alpha, sort_perms(alpha).p);
}

LaurentPoly tE_catalan(const ExpVec& alpha) {
    int ell = static_cast<int>(alpha.size());
    int m = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (m == 0) return LaurentPoly::one(ell);
    auto eta = conjugate_sorted(alpha);
    if (m <= ell) {
        ExpVec mu(ell, 0);
        std::fill(mu.begin(), mu.begin() + m, 1);
        return catalan_recursive(RootIdeal::delta_prime(eta, ell), mu,
                                 sort_perms(alpha).p_long);
    }
    ExpVec padded = alpha;
    padded.resize(m, 0);
    ExpVec mu(m, 1);
    LaurentPoly H = catalan_recursive(RootIdeal::delta_prime(eta, m), mu,
                                      sort_perms(padded).p_long);
    return H.kill_vars_above(ell);
}

LaurentPoly E_from_tE(const ExpVec& alpha) {
    LaurentPoly f = tE(alpha);
    long shift = 0;
    for (int a : alpha) shift += static_cast<long>(a) * (a - 1) / 2;
    LaurentPoly r(f.ell());
    for (const auto& [e, c] : f.terms())
        r.add_term(e, c.inverted_q().shifted(static_cast<int>(shift)));
    if (!r.is_zero() && r.min_q_exp() < 0)
        throw std::logic_error("E_from_tE: negative q-exponent after shift");
    return r;
}

SymmetrizeResult symmetrize_check(const ExpVec& alpha) {
    int ell = static_cast<int>(alpha.size());
    int m = std::accumulate(alpha.begin(), alpha.end(), 0);
    SymmetrizeResult res;
    res.lhs = pi_w(HeckeElt::longest(ell), tE(alpha));
    if (m == 0) {
        res.rhs_catalan = LaurentPoly::one(ell);
        res.rhs_tableaux = LaurentPoly::one(ell);
        res.ok = res.lhs == res.rhs_catalan;
        return res;
    }
    auto eta = conjugate_sorted(alpha);
    RootIdeal psi = (m <= ell) ? RootIdeal::parabolic_padded(eta, ell)
                               : RootIdeal::parabolic(eta);
    if (m <= ell) {
        ExpVec mu(ell, 0);
        std::fill(mu.begin(), mu.begin() + m, 1);
        res.rhs_catalan = catalan_recursive(psi, mu, HeckeElt::longest(ell));
    } else {
        res.rhs_catalan = catalan_recursive(psi, ExpVec(m, 1), HeckeElt::longest(m))
                              .kill_vars_above(ell);
    }
    // charge-weighted Schur sum over nr(psi)-katabolizable standard tableaux
    std::vector<int> n(psi.nr().begin(), psi.nr().begin() + (m - 1));
    for (int& v : n) v = std::min(v, ell);  // ambient row count is ell
    res.rhs_tableaux = LaurentPoly::zero(ell);
    for (const auto& U : ssyt_of_content(std::vector<int>(m, 1), ell)) {
        if (!is_n_katabolizable(U, n)) continue;
        int q = static_cast<int>(charge(U));
        res.rhs_tableaux += schur_poly(U.shape(), ell).scaled(QPoly::q_power(q));
        std::vector<int> lambda = U.shape();
        while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
        res.schur[{q, std::move(lambda)}] += 1;
    }
    res.ok = res.lhs == res.rhs_catalan && res.lhs == res.rhs_tableaux;
    return res;
}

bool stability_check(const ExpVec& beta, int ell) {
    if (static_cast<int>(beta.size()) != ell)
        throw std::invalid_argument("stability_check: beta length != ell");
    ExpVec padded = beta;
    padded.push_back(0);
    LaurentPoly big = tE(padded).kill_vars_above(ell);
    return big == tE(beta);
}

}  // namespace nscat
