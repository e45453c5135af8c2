#include "nscat/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nscat {

Perm::Perm(int ell) : img_(ell) {
    if (ell < 1) throw std::invalid_argument("Perm: ell must be positive");
    std::iota(img_.begin(), img_.end(), 1);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    int n = static_cast<int>(img_.size());
    if (n < 1) throw std::invalid_argument("Perm: empty one-line notation");
    std::vector<char> seen(n + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Perm: not a permutation");
        seen[v] = 1;
    }
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < ell(); ++i) inv[img_[i] - 1] = i + 1;
    return Perm(inv);
}

int Perm::length() const {
    int n = ell(), count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (img_[i] > img_[j]) ++count;
    return count;
}

Perm Perm::times_s_right(int i) const {
    if (i < 1 || i >= ell()) throw std::out_of_range("times_s_right: bad generator index");
    std::vector<int> v = img_;
    std::swap(v[i - 1], v[i]);
    return Perm(v);
}

Perm Perm::times_s_left(int i) const {
    if (i < 1 || i >= ell()) throw std::out_of_range("times_s_left: bad generator index");
    std::vector<int> v = img_;
    for (int& x : v) {
        if (x == i) x = i + 1;
        else if (x == i + 1) x = i;
    }
    return Perm(v);
}

Perm Perm::longest(int ell) {
    std::vector<int> v(ell);
    for (int i = 0; i < ell; ++i) v[i] = ell - i;
    return Perm(v);
}

bool bruhat_leq(const Perm& u, const Perm& v) {
    if (u.ell() != v.ell()) throw std::invalid_argument("bruhat_leq: size mismatch");
    int n = u.ell();
    // u <= v iff for all i,j: #{a <= i : u(a) >= j} <= #{a <= i : v(a) >= j}
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int cu = 0, cv = 0;
            for (int a = 1; a <= i; ++a) {
                if (u(a) >= j) ++cu;
                if (v(a) >= j) ++cv;
            }
            if (cu > cv) return false;
        }
    }
    return true;
}

HeckeElt HeckeElt::generator(int ell, int i) {
    return HeckeElt(Perm(ell).times_s_right(i));
}

HeckeElt HeckeElt::from_word(int ell, const std::vector<int>& word) {
    HeckeElt w(ell);
    for (int i : word) w = w.demazure_gen(i);
    return w;
}

HeckeElt HeckeElt::longest(int ell) { return HeckeElt(Perm::longest(ell)); }

HeckeElt HeckeElt::c_elt(int ell, int d) {
    if (d < 1 || d > ell) throw std::out_of_range("c_elt: d must be in [ell]");
    std::vector<int> word;
    for (int i = ell - 1; i >= d; --i) word.push_back(i);
    return from_word(ell, word);
}

HeckeElt HeckeElt::interval_reversal(int ell, int a, int b) {
    if (a < 1 || b > ell || a > b) throw std::out_of_range("interval_reversal: bad interval");
    std::vector<int> v(ell);
    std::iota(v.begin(), v.end(), 1);
    std::reverse(v.begin() + (a - 1), v.begin() + b);
    return HeckeElt(Perm(v));
}

HeckeElt HeckeElt::demazure_gen(int i) const {
    // w * sigma_i = w s_i if that increases length, else w
    if (perm_(i) < perm_(i + 1)) return HeckeElt(perm_.times_s_right(i));
    return *this;
}

HeckeElt HeckeElt::demazure(const HeckeElt& v) const {
    if (ell() != v.ell()) throw std::invalid_argument("demazure: mismatched ell");
    HeckeElt w = *this;
    for (int i : v.reduced_word()) w = w.demazure_gen(i);
    return w;
}

std::vector<int> HeckeElt::reduced_word() const {
    // Greedy smallest left descent yields the lex-min reduced word.
    std::vector<int> word;
    Perm w = perm_;
    Perm winv = w.inverse();
    int n = ell();
    while (true) {
        int pick = 0;
        for (int i = 1; i < n; ++i) {
            if (winv(i) > winv(i + 1)) { pick = i; break; }
        }
        if (pick == 0) break;
        word.push_back(pick);
        w = w.times_s_left(pick);
        winv = w.inverse();
    }
    return word;
}

std::set<int> HeckeElt::right_descents() const {
    std::set<int> d;
    for (int i = 1; i < ell(); ++i)
        if (perm_(i) > perm_(i + 1)) d.insert(i);
    return d;
}

std::string HeckeElt::to_string() const {
    auto word = reduced_word();
    if (word.empty()) return "id";
    std::ostringstream os;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) os << ',';
        os << word[i];
    }
    return os.str();
}

HeckeElt HeckeElt::parse(int ell, const std::string& s) {
    if (s == "id" || s.empty()) return HeckeElt(ell);
    if (s == "w0") return longest(ell);
    std::vector<int> word;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 1 || v >= ell)
            throw std::invalid_argument("Hecke word: bad generator index '" + tok + "'");
        word.push_back(v);
    }
    return from_word(ell, word);
}

SortedPerms sort_perms(const std::vector<int>& alpha) {
    int n = static_cast<int>(alpha.size());
    if (n < 1) throw std::invalid_argument("sort_perms: empty vector");
    // Stable matching of sorted entries to their original positions gives the
    // shortest permutation p with p . alpha_plus = alpha.
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return alpha[a] > alpha[b]; });
    std::vector<int> alpha_plus(n), img(n);
    for (int j = 0; j < n; ++j) {
        alpha_plus[j] = alpha[idx[j]];
        img[j] = idx[j] + 1;  // p(j) = original position of j-th sorted entry
    }
    HeckeElt p{Perm(img)};
    // Longest element of the stabilizer of alpha_plus: reverse each run of
    // equal values.
    HeckeElt w0stab(n);
    int start = 0;
    while (start < n) {
        int end = start;
        while (end + 1 < n && alpha_plus[end + 1] == alpha_plus[start]) ++end;
        if (end > start)
            w0stab = w0stab.demazure(HeckeElt::interval_reversal(n, start + 1, end + 1));
        start = end + 1;
    }
    return SortedPerms{std::move(alpha_plus), p, p.demazure(w0stab)};
}

std::vector<int> hecke_action(const HeckeElt& w, std::vector<int> alpha) {
    if (static_cast<int>(alpha.size()) != w.ell())
        throw std::invalid_argument("hecke_action: length mismatch");
    auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        if (alpha[i - 1] >= alpha[i]) std::swap(alpha[i - 1], alpha[i]);
    }
    return alpha;
}

}  // namespace nscat
