#include "nscat/crystal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nscat {

Biword::Biword(int ell, std::vector<int> mu, std::vector<std::vector<int>> factors)
    : ell_(ell), mu_(std::move(mu)), factors_(std::move(factors)) {
    if (ell < 1) throw std::invalid_argument("Biword: ell must be positive");
    int p = static_cast<int>(mu_.size());
    if (p < 1 || static_cast<int>(factors_.size()) != p)
        throw std::invalid_argument("Biword: factors must match mu");
    for (int t = 0; t < p; ++t) {
        int i = p - t;  // block index: factor order is b^p .. b^1
        if (static_cast<int>(factors_[t].size()) != mu_[i - 1])
            throw std::invalid_argument("Biword: block length differs from mu");
        if (!std::is_sorted(factors_[t].begin(), factors_[t].end()))
            throw std::invalid_argument("Biword: blocks must weakly increase");
        for (int x : factors_[t])
            if (x < 1 || x > ell) throw std::invalid_argument("Biword: letter out of range");
    }
    for (int i = 0; i + 1 < p; ++i)
        if (mu_[i] < mu_[i + 1]) throw std::invalid_argument("Biword: mu must weakly decrease");
}

Biword Biword::seed(int ell, int s) {
    return Biword(ell, {s}, {std::vector<int>(s, 1)});
}

std::vector<int> Biword::bottom_word() const {
    std::vector<int> w;
    for (const auto& f : factors_) w.insert(w.end(), f.begin(), f.end());
    return w;
}

std::vector<int> Biword::content() const {
    std::vector<int> c(ell_, 0);
    for (const auto& f : factors_)
        for (int x : f) ++c[x - 1];
    return c;
}

std::string Biword::label() const {
    std::ostringstream os;
    for (const auto& f : factors_)
        for (int x : f) {
            if (x > 9) throw std::domain_error("Biword::label: letters above 9");
            os << x;
        }
    if (os.str().empty()) return "-";
    return os.str();
}

Biword Biword::with_factor(int t, std::vector<int> word) const {
    auto fs = factors_;
    fs[t] = std::move(word);
    return Biword(ell_, mu_, std::move(fs));
}

Biword Biword::append_block_of_ones(int s) const {
    auto mu = mu_;
    mu.insert(mu.begin(), s);  // new mu_1 = s
    auto fs = factors_;
    fs.push_back(std::vector<int>(s, 1));
    return Biword(ell_, std::move(mu), std::move(fs));
}

std::optional<std::vector<int>> f_row(int i, const std::vector<int>& v, int ell) {
    if (i < 0 || i >= ell) throw std::out_of_range("f_row: bad index");
    std::vector<int> w = v;
    if (i == 0) {
        if (w.empty() || w.back() != ell) return std::nullopt;
        w.pop_back();
        w.insert(w.begin(), 1);
        return w;
    }
    // change the rightmost i to i+1
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it == i) {
            *it = i + 1;
            return w;
        }
        if (*it < i) break;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> e_row(int i, const std::vector<int>& v, int ell) {
    if (i < 0 || i >= ell) throw std::out_of_range("e_row: bad index");
    std::vector<int> w = v;
    if (i == 0) {
        if (w.empty() || w.front() != 1) return std::nullopt;
        w.erase(w.begin());
        w.push_back(ell);
        return w;
    }
    // change the leftmost i+1 to i
    for (auto it = w.begin(); it != w.end(); ++it) {
        if (*it == i + 1) {
            *it = i;
            return w;
        }
        if (*it > i + 1) break;
    }
    return std::nullopt;
}

std::pair<int, int> eps_phi_row(int i, const std::vector<int>& v, int ell) {
    int up = (i == 0) ? 1 : i + 1;  // letter raised by e
    int dn = (i == 0) ? ell : i;    // letter lowered by f
    int eps = 0, phi = 0;
    for (int x : v) {
        if (x == up) ++eps;
        if (x == dn) ++phi;
    }
    return {eps, phi};
}

namespace {

// (eps, phi) of the tensor product of factors [lo, hi), folded left to right.
std::pair<int, int> eps_phi_range(int i, const Biword& b, int lo, int hi) {
    int eps = 0, phi = 0;
    for (int t = lo; t < hi; ++t) {
        auto [ef, pf] = eps_phi_row(i, b.factor(t), b.ell());
        int new_phi = phi + std::max(0, pf - eps);
        int new_eps = ef + std::max(0, eps - pf);
        phi = new_phi;
        eps = new_eps;
    }
    return {eps, phi};
}

// Bracket rule for classical i: '(' under each i+1, ')' under each i;
// e flips the leftmost unmatched i+1, f the rightmost unmatched i.
std::optional<Biword> bracket_apply(int i, const Biword& b, bool lowering) {
    std::vector<std::pair<int, int>> open;   // (factor, offset) of unmatched i+1
    std::vector<std::pair<int, int>> close;  // unmatched i
    for (int t = 0; t < b.p(); ++t) {
        const auto& w = b.factor(t);
        for (int k = 0; k < static_cast<int>(w.size()); ++k) {
            if (w[k] == i + 1) open.push_back({t, k});
            else if (w[k] == i) {
                if (!open.empty()) open.pop_back();
                else close.push_back({t, k});
            }
        }
    }
    if (lowering) {
        if (close.empty()) return std::nullopt;
        auto [t, k] = close.back();
        auto w = b.factor(t);
        w[k] = i + 1;
        return b.with_factor(t, std::move(w));
    }
    if (open.empty()) return std::nullopt;
    auto [t, k] = open.front();
    auto w = b.factor(t);
    w[k] = i;
    return b.with_factor(t, std::move(w));
}

// Recursive tensor rule on factors [lo, hi); used for i = 0.
std::optional<Biword> tensor_apply(int i, const Biword& b, int lo, int hi, bool lowering) {
    if (hi - lo == 1) {
        auto r = lowering ? f_row(i, b.factor(lo), b.ell()) : e_row(i, b.factor(lo), b.ell());
        if (!r) return std::nullopt;
        return b.with_factor(lo, std::move(*r));
    }
    auto [e1, p1] = eps_phi_row(i, b.factor(lo), b.ell());
    auto [er, pr] = eps_phi_range(i, b, lo + 1, hi);
    bool act_left = lowering ? (e1 >= pr) : (e1 > pr);
    if (act_left) {
        auto r = lowering ? f_row(i, b.factor(lo), b.ell()) : e_row(i, b.factor(lo), b.ell());
        if (!r) return std::nullopt;
        return b.with_factor(lo, std::move(*r));
    }
    return tensor_apply(i, b, lo + 1, hi, lowering);
}

}  // namespace

std::optional<Biword> f_tensor(int i, const Biword& b) {
    if (i < 0 || i >= b.ell()) throw std::out_of_range("f_tensor: bad index");
    if (i == 0) return tensor_apply(0, b, 0, b.p(), true);
    return bracket_apply(i, b, true);
}

std::optional<Biword> e_tensor(int i, const Biword& b) {
    if (i < 0 || i >= b.ell()) throw std::out_of_range("e_tensor: bad index");
    if (i == 0) return tensor_apply(0, b, 0, b.p(), false);
    return bracket_apply(i, b, false);
}

std::pair<int, int> eps_phi(int i, const Biword& b) {
    int eps = 0, phi = 0;
    for (Biword cur = b;;) {
        auto r = e_tensor(i, cur);
        if (!r) break;
        cur = std::move(*r);
        ++eps;
    }
    for (Biword cur = b;;) {
        auto r = f_tensor(i, cur);
        if (!r) break;
        cur = std::move(*r);
        ++phi;
    }
    return {eps, phi};
}

Biword e_max(int i, const Biword& b) {
    Biword cur = b;
    while (auto r = e_tensor(i, cur)) cur = std::move(*r);
    return cur;
}

Biword e_max(const HeckeElt& w, const Biword& b) {
    auto word = w.reduced_word();
    Biword cur = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = e_max(*it, cur);
    return cur;
}

namespace {
Biword shift_letters(const Biword& b, int delta) {
    int ell = b.ell();
    auto fs = b.factors();
    for (auto& f : fs) {
        for (int& x : f) x = (x - 1 + delta % ell + ell) % ell + 1;
        std::sort(f.begin(), f.end());
    }
    return Biword(ell, b.mu(), std::move(fs));
}
}  // namespace

Biword tau_twist(const Biword& b) { return shift_letters(b, 1); }
Biword tau_inv_twist(const Biword& b) { return shift_letters(b, -1); }

Biword reflection(int i, const Biword& b) {
    if (i < 1 || i >= b.ell()) throw std::out_of_range("reflection: bad index");
    auto c = b.content();
    int k = c[i - 1] - c[i];
    Biword cur = b;
    for (int t = 0; t < k; ++t) {
        auto r = f_tensor(i, cur);
        if (!r) throw std::logic_error("reflection: f ran out");
        cur = std::move(*r);
    }
    for (int t = 0; t < -k; ++t) {
        auto r = e_tensor(i, cur);
        if (!r) throw std::logic_error("reflection: e ran out");
        cur = std::move(*r);
    }
    return cur;
}

Tabloid inv(const Biword& b) {
    int p = b.p();
    std::vector<std::vector<int>> rows(b.ell());
    for (int t = 0; t < p; ++t) {
        int top = p - t;  // block index doubles as the top letter of factor t
        for (int x : b.factor(t)) rows[x - 1].push_back(top);
    }
    for (auto& r : rows) std::sort(r.begin(), r.end());
    return Tabloid(b.ell(), std::move(rows));
}

Biword inv(const Tabloid& T, int ell, int p) {
    if (p > 0 && T.max_letter() > p)
        throw std::invalid_argument("inv: letter exceeds block count");
    p = std::max(p, T.max_letter());
    if (p == 0) p = 1;
    std::vector<std::vector<int>> factors(p);
    std::vector<int> mu(p, 0);
    for (int r = 1; r <= T.ell(); ++r)
        for (int x : T.row(r)) {
            if (x > p) throw std::invalid_argument("inv: letter exceeds block count");
            if (r > ell) throw std::invalid_argument("inv: row index exceeds ell");
            factors[p - x].push_back(r);
            ++mu[x - 1];
        }
    for (auto& f : factors) std::sort(f.begin(), f.end());
    return Biword(ell, std::move(mu), std::move(factors));
}

Biword kat_prime(const Biword& b) {
    if (b.p() < 2) throw std::invalid_argument("kat_prime: needs at least two blocks");
    std::vector<int> mu(b.mu().begin() + 1, b.mu().end());
    std::vector<std::vector<int>> fs(b.factors().begin(), b.factors().end() - 1);
    return tau_inv_twist(Biword(b.ell(), std::move(mu), std::move(fs)));
}

Tabloid recording_Q(const Biword& b) {
    // Column insert block by block b^1, b^2, ...; new boxes of block i get i.
    std::vector<std::vector<int>> P, Q;
    auto column_insert_one = [&](int x) {
        size_t c = 0;
        while (true) {
            size_t r = 0;
            while (r < P.size() && P[r].size() > c && P[r][c] < x) ++r;
            if (r == P.size() || P[r].size() <= c) {
                if (r == P.size()) P.push_back({});
                if (P[r].size() != c) throw std::logic_error("recording_Q: ragged placement");
                P[r].push_back(x);
                return std::pair<size_t, size_t>{r, c};
            }
            std::swap(P[r][c], x);
            ++c;
        }
    };
    for (int i = 1; i <= b.p(); ++i) {
        const auto& blk = b.block(i);
        for (auto it = blk.rbegin(); it != blk.rend(); ++it) {
            auto [r, c] = column_insert_one(*it);
            if (Q.size() <= r) Q.push_back({});
            if (Q[r].size() != c) throw std::logic_error("recording_Q: non-corner growth");
            Q[r].push_back(i);
        }
    }
    Q.resize(b.ell());
    return Tabloid(b.ell(), std::move(Q));
}

namespace {

std::set<Biword> f_closure(int j, std::set<Biword> S) {
    std::vector<Biword> stack(S.begin(), S.end());
    while (!stack.empty()) {
        Biword b = std::move(stack.back());
        stack.pop_back();
        auto r = f_tensor(j, b);
        if (r && S.insert(*r).second) stack.push_back(std::move(*r));
    }
    return S;
}

DarkCrystal dark_impl(int ell, const std::vector<int>& mu,
                      const std::vector<HeckeElt>& w_list,
                      const std::vector<std::vector<int>>* words) {
    int p = static_cast<int>(mu.size());
    if (p == 0 || static_cast<int>(w_list.size()) != p)
        throw std::invalid_argument("dark: mu and w list lengths differ");
    for (int i = 0; i + 1 < p; ++i)
        if (mu[i] < mu[i + 1]) throw std::invalid_argument("dark: mu must weakly decrease");
    auto word_of = [&](int i) {
        return words ? (*words)[i] : w_list[i].reduced_word();
    };
    std::set<Biword> S{Biword::seed(ell, mu[p - 1])};
    auto apply_F = [&](int i) {
        auto word = word_of(i);
        for (auto it = word.rbegin(); it != word.rend(); ++it) S = f_closure(*it, std::move(S));
    };
    apply_F(p - 1);
    for (int j = p - 1; j >= 1; --j) {
        std::set<Biword> next;
        for (const auto& b : S) next.insert(tau_twist(b).append_block_of_ones(mu[j - 1]));
        S = std::move(next);
        apply_F(j - 1);
    }
    DarkCrystal D{ell, mu, w_list, std::vector<Biword>(S.begin(), S.end())};
    return D;
}

}  // namespace

DarkCrystal dark(int ell, const std::vector<int>& mu, const std::vector<HeckeElt>& w_list) {
    return dark_impl(ell, mu, w_list, nullptr);
}

DarkCrystal dark_with_words(int ell, const std::vector<int>& mu,
                            const std::vector<HeckeElt>& w_list,
                            const std::vector<std::vector<int>>& words) {
    return dark_impl(ell, mu, w_list, &words);
}

LaurentPoly char_charge(const DarkCrystal& D) {
    LaurentPoly f(D.ell);
    for (const auto& b : D.elements)
        f += LaurentPoly::monomial(b.content(), QPoly::q_power(static_cast<int>(charge(inv(b)))));
    return f;
}

std::map<Tabloid, std::vector<Biword>> gl_components(const DarkCrystal& D) {
    std::map<Tabloid, std::vector<Biword>> comps;
    for (const auto& b : D.elements) comps[recording_Q(b)].push_back(b);
    return comps;
}

bool f0_acts_in_vacuum_tensor(const Biword& b) {
    auto [eps, phi] = eps_phi_range(0, b, 0, b.p());
    return eps >= b.mu()[0];
}

// tabloid-side operations that need crystal reflections

Tabloid reflect_Sij_tabloid(int i, int j, const Tabloid& T) {
    if (!(1 <= i && i < j && j <= T.ell()))
        throw std::out_of_range("reflect_Sij_tabloid: bad indices");
    Biword b = inv(T, T.ell());
    for (int t = i; t <= j - 1; ++t) b = reflection(t, b);
    for (int t = j - 2; t >= i; --t) b = reflection(t, b);
    return inv(b);
}

bool is_extreme_katabolizable(const Tabloid& T, const std::vector<HeckeElt>& w_list) {
    if (!is_row_frank(T))
        throw std::invalid_argument("is_extreme_katabolizable: tabloid is not row frank");
    if (!is_w_katabolizable(T, w_list)) return false;
    for (const auto& [ik, beta] : bruhat_covers_up(T.shape())) {
        if (is_w_katabolizable(reflect_Sij_tabloid(ik.first, ik.second, T), w_list))
            return false;
    }
    return true;
}

}  // namespace nscat
