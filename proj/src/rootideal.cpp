#include "nscat/rootideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace nscat {

RootIdeal::RootIdeal(int ell, std::vector<int> nr) : ell_(ell), nr_(std::move(nr)) {
    if (ell < 1) throw std::invalid_argument("RootIdeal: ell must be positive");
    if (static_cast<int>(nr_.size()) == ell - 1) nr_.push_back(1);
    validate();
}

void RootIdeal::validate() const {
    if (static_cast<int>(nr_.size()) != ell_)
        throw std::invalid_argument("RootIdeal: nr must have ell (or ell-1) entries");
    for (int i = 1; i <= ell_; ++i) {
        int v = nr_[i - 1];
        if (v < 1 || v > ell_ - i + 1)
            throw std::invalid_argument("RootIdeal: nr entry out of range");
        if (i < ell_ && v > nr_[i] + 1)
            throw std::invalid_argument("RootIdeal: nr violates the ideal condition");
    }
}

RootIdeal RootIdeal::full(int ell) { return RootIdeal(ell, std::vector<int>(ell, 1)); }

RootIdeal RootIdeal::empty_ideal(int ell) {
    std::vector<int> nr(ell);
    for (int i = 1; i <= ell; ++i) nr[i - 1] = ell - i + 1;
    return RootIdeal(ell, nr);
}

RootIdeal RootIdeal::from_roots(int ell, const std::set<std::pair<int, int>>& roots) {
    std::vector<int> nr(ell);
    for (int i = 1; i <= ell; ++i) {
        int cnt = 0;
        for (int j = i + 1; j <= ell; ++j)
            if (roots.count({i, j})) ++cnt;
        nr[i - 1] = ell - i + 1 - cnt;
    }
    RootIdeal psi(ell, nr);
    if (psi.roots() != roots)
        throw std::invalid_argument("from_roots: set is not an upper order ideal");
    return psi;
}

RootIdeal RootIdeal::parabolic(const std::vector<int>& eta) {
    int ell = 0;
    for (int b : eta) {
        if (b < 1) throw std::invalid_argument("parabolic: block sizes must be positive");
        ell += b;
    }
    if (ell == 0) throw std::invalid_argument("parabolic: empty composition");
    return parabolic_padded(eta, ell);
}

RootIdeal RootIdeal::parabolic_padded(const std::vector<int>& eta, int ell) {
    int m = 0;
    for (int b : eta) {
        if (b < 1) throw std::invalid_argument("parabolic_padded: bad block size");
        m += b;
    }
    if (ell < m) throw std::invalid_argument("parabolic_padded: ell < |eta|");
    // nr_i = (end of the block containing i) - i + 1 within [1, m]; rows past m full.
    std::vector<int> nr(ell, 1);
    int pos = 0;
    for (int b : eta) {
        int end = pos + b;
        for (int i = pos + 1; i <= end; ++i) nr[i - 1] = end - i + 1;
        pos = end;
    }
    return RootIdeal(ell, nr);
}

RootIdeal RootIdeal::delta_prime(const std::vector<int>& eta, int ell) {
    int k = static_cast<int>(eta.size());
    if (k == 0) throw std::invalid_argument("delta_prime: empty partition");
    for (int t = 0; t + 1 < k; ++t)
        if (eta[t] < eta[t + 1])
            throw std::invalid_argument("delta_prime: eta must be weakly decreasing");
    if (eta[k - 1] < 1) throw std::invalid_argument("delta_prime: parts must be positive");
    int m = std::accumulate(eta.begin(), eta.end(), 0);
    if (ell < m) throw std::invalid_argument("delta_prime: ell < |eta|");
    std::vector<int> nr;
    for (int t = 0; t + 1 < k; ++t) {
        int next = eta[t + 1];
        for (int r = 0; r < next; ++r) nr.push_back(eta[t]);
        for (int v = eta[t]; v >= next + 1; --v) nr.push_back(v);
    }
    for (int v = eta[k - 1]; v >= 2; --v) nr.push_back(v);
    if (static_cast<int>(nr.size()) != m - 1) throw std::logic_error("delta_prime: bad nr length");
    // rows m..ell are full
    nr.resize(ell, 1);
    return RootIdeal(ell, nr);
}

RootIdeal RootIdeal::delta_k(const std::vector<int>& mu, int k) {
    int ell = static_cast<int>(mu.size());
    if (ell == 0) throw std::invalid_argument("delta_k: empty mu");
    if (k < mu[0]) throw std::invalid_argument("delta_k: k < mu_1");
    std::vector<int> nr(ell);
    for (int i = 1; i <= ell; ++i) nr[i - 1] = std::min(k - mu[i - 1] + 1, ell - i + 1);
    return RootIdeal(ell, nr);
}

bool RootIdeal::contains(int i, int j) const {
    return i >= 1 && i < j && j <= ell_ && j >= i + nr_[i - 1];
}

size_t RootIdeal::size() const {
    size_t s = 0;
    for (int i = 1; i <= ell_; ++i) s += row_size(i);
    return s;
}

std::set<std::pair<int, int>> RootIdeal::roots() const {
    std::set<std::pair<int, int>> r;
    for (int i = 1; i <= ell_; ++i)
        for (int j = i + nr_[i - 1]; j <= ell_; ++j) r.insert({i, j});
    return r;
}

std::vector<std::pair<int, int>> RootIdeal::removable_roots() const {
    // (i, i + nr_i) is removable iff row i is nonempty and nr_i <= nr_{i+1}.
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i < ell_; ++i) {
        if (nr_[i - 1] <= ell_ - i && nr_[i - 1] <= nr_[i])
            out.push_back({i, i + nr_[i - 1]});
    }
    return out;
}

RootIdeal RootIdeal::remove(std::pair<int, int> root) const {
    auto [i, j] = root;
    if (!contains(i, j) || j != i + nr_[i - 1])
        throw std::invalid_argument("remove: not the leftmost root of its row");
    std::vector<int> nr = nr_;
    nr[i - 1] += 1;
    return RootIdeal(ell_, nr);
}

RootIdeal RootIdeal::rotate() const {
    std::set<std::pair<int, int>> r;
    for (auto [i, j] : roots())
        if (i > 1) r.insert({i - 1, j - 1});
    for (int i = 1; i < ell_; ++i) r.insert({i, ell_});
    return from_roots(ell_, r);
}

std::vector<HeckeElt> RootIdeal::ns_words() const {
    std::vector<HeckeElt> ws;
    for (int i = 1; i < ell_; ++i) ws.push_back(HeckeElt::c_elt(ell_, nr_[i - 1]));
    return ws;
}

bool RootIdeal::is_tame(const HeckeElt& w) const {
    if (w.ell() != ell_) throw std::invalid_argument("is_tame: mismatched ell");
    auto desc = w.right_descents();
    for (int i = nr_[0] + 1; i <= ell_ - 1; ++i)
        if (!desc.count(i)) return false;
    return true;
}

std::vector<RootIdeal> all_root_ideals(int ell) {
    std::vector<RootIdeal> out;
    std::vector<int> nr(ell);
    nr[ell - 1] = 1;
    std::function<void(int)> rec = [&](int i) {
        if (i == 0) {
            out.emplace_back(ell, nr);
            return;
        }
        int hi = std::min(ell - i + 1, nr[i] + 1);  // nr_i <= nr_{i+1} + 1
        for (int v = 1; v <= hi; ++v) {
            nr[i - 1] = v;
            rec(i - 1);
        }
    };
    if (ell == 1) out.emplace_back(1, std::vector<int>{1});
    else rec(ell - 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nscat
