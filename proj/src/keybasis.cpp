#include "nscat/keybasis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nscat {

LaurentPoly KeyExpansion::reconstruct() const {
    LaurentPoly f(ell == 0 ? 1 : ell);
    for (const auto& [qa, c] : terms) {
        const auto& [a, alpha] = qa;
        f += key(alpha).scaled(QPoly::q_power(a, c));
    }
    return f;
}

std::string KeyExpansion::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [qa, c] : terms) {
        const auto& [a, alpha] = qa;
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c.str() << "*";
        if (a != 0) os << "q" << (a == 1 ? std::string() : "^" + std::to_string(a)) << "*";
        os << "k[";
        for (size_t i = 0; i < alpha.size(); ++i) {
            if (i) os << ',';
            os << alpha[i];
        }
        os << "]";
    }
    return os.str();
}

LaurentPoly key(const ExpVec& alpha) {
    auto sp = sort_perms(alpha);
    return pi_w(sp.p, LaurentPoly::monomial(sp.alpha_plus));
}

LaurentPoly atom(const ExpVec& alpha) {
    auto sp = sort_perms(alpha);
    return pi_hat_word(sp.p.reduced_word(), LaurentPoly::monomial(sp.alpha_plus));
}

namespace {

// Selection order for greedy extraction: a monomial is taken only when it is
// maximal among those present, first by dominance of the sorted exponent
// vector, then by Bruhat order among equal sorted vectors.  Sorting
// descending-lex refines dominance and the inversion count of p(beta)
// refines Bruhat, so the triple below is a linear extension of that order.
struct MonKey {
    ExpVec sorted_desc;
    int p_length;
    ExpVec beta;
    bool operator<(const MonKey& o) const {
        if (sorted_desc != o.sorted_desc) return sorted_desc < o.sorted_desc;
        if (p_length != o.p_length) return p_length < o.p_length;
        return beta < o.beta;
    }
};

MonKey mon_key(const ExpVec& beta) {
    ExpVec s = beta;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return MonKey{std::move(s), sort_perms(beta).p.length(), beta};
}

// Key expansion of one homogeneous integer-coefficient component with
// nonnegative exponents.  key_cache avoids recomputing kappa monomials.
void expand_component(std::map<ExpVec, Int> g, int qexp, int shift,
                      std::map<ExpVec, std::map<ExpVec, Int>>& key_cache,
                      KeyExpansion& out) {
    std::map<MonKey, ExpVec> order;
    for (const auto& [e, c] : g) order.emplace(mon_key(e), e);
    while (!g.empty()) {
        ExpVec beta = order.rbegin()->second;
        auto it = g.find(beta);
        if (it == g.end() || it->second == 0) {
            order.erase(std::prev(order.end()));
            continue;
        }
        Int c = it->second;
        auto kit = key_cache.find(beta);
        if (kit == key_cache.end()) {
            LaurentPoly kb = key(beta);
            std::map<ExpVec, Int> mono;
            for (const auto& [e, qc] : kb.terms()) mono[e] = qc.coeff(0);
            kit = key_cache.emplace(beta, std::move(mono)).first;
        }
        for (const auto& [e, kc] : kit->second) {
            Int& v = g[e];
            bool existed = (v != 0);
            v -= c * kc;
            if (v == 0) g.erase(e);
            else if (!existed) order.emplace(mon_key(e), e);
        }
        ExpVec alpha = beta;
        for (int& x : alpha) x -= shift;
        auto [tit, fresh] = out.terms.try_emplace({qexp, std::move(alpha)}, c);
        if (!fresh) {
            tit->second += c;
            if (tit->second == 0) out.terms.erase(tit);
        }
    }
}

}  // namespace

KeyExpansion expand_keys(const LaurentPoly& f) {
    int ell = f.ell();
    KeyExpansion out;
    out.ell = ell;
    // bucket by (q-exponent, total x-degree): keys are homogeneous
    std::map<std::pair<int, int>, std::map<ExpVec, Int>> buckets;
    for (const auto& [e, qc] : f.terms()) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        for (const auto& [a, c] : qc.coeffs()) buckets[{a, deg}][e] += c;
    }
    std::map<ExpVec, std::map<ExpVec, Int>> key_cache;
    for (auto& [qd, comp] : buckets) {
        int shift = 0;
        for (const auto& [e, c] : comp)
            for (int x : e) shift = std::max(shift, -x);
        if (shift > 0) {
            std::map<ExpVec, Int> shifted;
            for (auto& [e, c] : comp) {
                ExpVec e2 = e;
                for (int& x : e2) x += shift;
                shifted.emplace(std::move(e2), c);
            }
            comp = std::move(shifted);
        }
        expand_component(std::move(comp), qd.first, shift, key_cache, out);
    }
    return out;
}

LaurentPoly poly_trunc(const LaurentPoly& f) {
    KeyExpansion ke = expand_keys(f);
    LaurentPoly r(f.ell());
    for (const auto& [qa, c] : ke.terms) {
        const auto& [a, alpha] = qa;
        if (std::any_of(alpha.begin(), alpha.end(), [](int x) { return x < 0; })) continue;
        r += key(alpha).scaled(QPoly::q_power(a, c));
    }
    return r;
}

QPoly key_coeff_ct_oracle(const LaurentPoly& f, const ExpVec& alpha) {
    int ell = f.ell();
    if (static_cast<int>(alpha.size()) != ell)
        throw std::invalid_argument("key_coeff_ct_oracle: length mismatch");
    LaurentPoly g = f;
    for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j) {
            ExpVec e(ell, 0);
            e[i - 1] = 1;
            e[j - 1] = -1;
            LaurentPoly factor = LaurentPoly::one(ell) - LaurentPoly::monomial(e);
            g = g * factor;
        }
    ExpVec w0alpha(alpha.rbegin(), alpha.rend());
    QPoly result;
    LaurentPoly dual_atom = atom(w0alpha);
    for (const auto& [beta, c] : dual_atom.terms()) {
        ExpVec rev(beta.rbegin(), beta.rend());
        result += c * g.coeff(rev);
    }
    return result;
}

}  // namespace nscat
