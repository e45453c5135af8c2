#include "nscat/catalan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace nscat {

namespace {

bool tail_sum_negative(const ExpVec& gamma) {
    long s = 0;
    for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) {
        s += *it;
        if (s < 0) return true;
    }
    return false;
}

}  // namespace

LaurentPoly catalan_recursive(const RootIdeal& psi, const ExpVec& gamma, const HeckeElt& w) {
    int ell = psi.ell();
    if (static_cast<int>(gamma.size()) != ell || w.ell() != ell)
        throw std::invalid_argument("catalan_recursive: mismatched ell");
    std::map<std::pair<std::vector<int>, ExpVec>, LaurentPoly> memo;
    std::function<LaurentPoly(const RootIdeal&, const ExpVec&)> G =
        [&](const RootIdeal& ps, const ExpVec& g) -> LaurentPoly {
        if (tail_sum_negative(g)) return LaurentPoly::zero(ell);
        auto key = std::make_pair(ps.nr(), g);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        LaurentPoly result(ell);
        if (ps.empty()) {
            result = poly_trunc(LaurentPoly::monomial(g));
        } else {
            auto rem = ps.removable_roots();
            auto [i, j] = rem.front();  // smallest row, then column
            ExpVec g2 = g;
            g2[i - 1] += 1;
            g2[j - 1] -= 1;
            result = G(ps.remove({i, j}), g);
            result += G(ps, g2).scaled(QPoly::q_power(1));
        }
        memo.emplace(std::move(key), result);
        return result;
    };
    return pi_w(w, G(psi, gamma));
}

LaurentPoly catalan_rotation(const RootIdeal& psi, const ExpVec& gamma, const HeckeElt& w) {
    int ell = psi.ell();
    if (static_cast<int>(gamma.size()) != ell || w.ell() != ell)
        throw std::invalid_argument("catalan_rotation: mismatched ell");
    if (!psi.is_tame(w)) throw std::invalid_argument("catalan_rotation: triple is not tame");
    for (int g : gamma)
        if (g < 0) throw std::invalid_argument("catalan_rotation: gamma must be nonnegative");
    const auto& nr = psi.nr();
    LaurentPoly f = LaurentPoly::one(ell).mul_x_power(1, gamma[ell - 1]);
    for (int i = ell - 1; i >= 1; --i) {
        f = pi_w(HeckeElt::c_elt(ell, nr[i - 1]), f);
        f = phi(f);
        f = f.mul_x_power(1, gamma[i - 1]);
    }
    return pi_w(w, f);
}

CatalanResult catalan_full(const RootIdeal& psi, const ExpVec& gamma, const HeckeElt& w,
                           CatalanRoute route) {
    CatalanResult r;
    r.poly = (route == CatalanRoute::rotation) ? catalan_rotation(psi, gamma, w)
                                               : catalan_recursive(psi, gamma, w);
    r.key_expansion = expand_keys(r.poly);
    if (w == HeckeElt::longest(psi.ell())) r.schur_expansion = schur_from_key(r.key_expansion);
    return r;
}

CatalanResult kschur(const std::vector<int>& mu, int k) {
    for (size_t i = 0; i + 1 < mu.size(); ++i)
        if (mu[i] < mu[i + 1]) throw std::invalid_argument("kschur: mu must be a partition");
    if (!mu.empty() && mu[0] > k) throw std::invalid_argument("kschur: k < mu_1");
    int ell = static_cast<int>(mu.size());
    return catalan_full(RootIdeal::delta_k(mu, k), mu, HeckeElt::longest(ell));
}

namespace {

// q-analog of Kostant's partition function over the positive roots of S_ell:
// number of ways to write gamma as a nonnegative root sum, q-weighted by the
// number of roots used.
QPoly kostant_pq(const ExpVec& gamma, int ell,
                 std::map<std::pair<int, ExpVec>, QPoly>& memo) {
    std::vector<std::pair<int, int>> roots;
    for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j) roots.push_back({i, j});
    std::function<QPoly(size_t, const ExpVec&)> rec = [&](size_t idx,
                                                          const ExpVec& g) -> QPoly {
        // every root has nonnegative prefix sums, so g must too
        long pre = 0;
        for (int x : g) {
            pre += x;
            if (pre < 0) return QPoly();
        }
        if (pre != 0) return QPoly();
        if (idx == roots.size())
            return std::all_of(g.begin(), g.end(), [](int x) { return x == 0; }) ? QPoly(1)
                                                                                 : QPoly();
        auto key = std::make_pair(static_cast<int>(idx), g);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        auto [i, j] = roots[idx];
        QPoly total;
        ExpVec g2 = g;
        for (int m = 0;; ++m) {
            total += rec(idx + 1, g2).shifted(m);
            // subtracting another e_i - e_j must keep prefix sums in [i, j) nonnegative
            long run = 0;
            bool ok = true;
            for (int t = 1; t < j && ok; ++t) {
                run += g2[t - 1];
                if (t >= i && run - 1 < 0) ok = false;
            }
            if (!ok) break;
            g2[i - 1] -= 1;
            g2[j - 1] += 1;
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(0, gamma);
}

}  // namespace

QPoly kostka_foulkes_qkostant(std::vector<int> lambda, std::vector<int> mu, int ell) {
    lambda.resize(ell, 0);
    mu.resize(ell, 0);
    if (std::accumulate(lambda.begin(), lambda.end(), 0L) !=
        std::accumulate(mu.begin(), mu.end(), 0L))
        throw std::invalid_argument("kostka_foulkes: |lambda| != |mu|");
    ExpVec lam_rho(ell), mu_rho(ell);
    for (int i = 0; i < ell; ++i) {
        lam_rho[i] = lambda[i] + (ell - 1 - i);
        mu_rho[i] = mu[i] + (ell - 1 - i);
    }
    std::map<std::pair<int, ExpVec>, QPoly> memo;
    // sum over rearrangements u of lam_rho (entries distinct), signed by the
    // permutation sorting u back to lam_rho
    std::vector<int> u = lam_rho;
    std::sort(u.begin(), u.end());
    QPoly total;
    do {
        int inv_count = 0;
        std::vector<int> index(ell);
        for (int i = 0; i < ell; ++i)
            index[i] = static_cast<int>(std::find(lam_rho.begin(), lam_rho.end(), u[i]) -
                                        lam_rho.begin());
        for (int a = 0; a < ell; ++a)
            for (int b = a + 1; b < ell; ++b)
                if (index[a] > index[b]) ++inv_count;
        ExpVec g(ell);
        for (int i = 0; i < ell; ++i) g[i] = u[i] - mu_rho[i];
        QPoly term = kostant_pq(g, ell, memo);
        if (inv_count % 2) total -= term;
        else total += term;
    } while (std::next_permutation(u.begin(), u.end()));
    return total;
}

NStats n_stats(const std::vector<int>& mu, int ell) {
    long n = 0, total = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
        n += static_cast<long>(i) * mu[i];
        total += mu[i];
    }
    long num = total * (ell - 1) - 2 * n;
    long den = 2L * ell;
    long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    num /= g;
    den /= g;
    if (den < 0) { den = -den; num = -num; }
    return NStats{n, num, den};
}

SchurExpansion schur_from_key(const KeyExpansion& ke) {
    SchurExpansion se;
    for (const auto& [qa, c] : ke.terms) {
        const auto& [a, alpha] = qa;
        if (!std::is_sorted(alpha.begin(), alpha.end()))
            throw std::domain_error("schur_from_key: key index not weakly increasing");
        std::vector<int> lambda(alpha.rbegin(), alpha.rend());
        while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
        se[{a, std::move(lambda)}] += c;
    }
    return se;
}

}  // namespace nscat
