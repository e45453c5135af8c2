#pragma once

#include <set>
#include <string>
#include <vector>

namespace nscat {

// Permutation of [ell] in one-line notation; img_[i-1] = w(i).
class Perm {
public:
    explicit Perm(int ell);
    explicit Perm(std::vector<int> images);

    int ell() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }  // 1-based
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    int length() const;  // inversion count

    Perm times_s_right(int i) const;  // w s_i: swap entries at positions i, i+1
    Perm times_s_left(int i) const;   // s_i w: swap values i, i+1

    static Perm longest(int ell);

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

// Bruhat order on S_ell (dot criterion); used as a brute-force oracle.
bool bruhat_leq(const Perm& u, const Perm& v);

// Element of the 0-Hecke monoid of S_ell, identified with its permutation.
class HeckeElt {
public:
    explicit HeckeElt(int ell) : perm_(ell) {}
    explicit HeckeElt(Perm p) : perm_(std::move(p)) {}

    static HeckeElt generator(int ell, int i);
    static HeckeElt from_word(int ell, const std::vector<int>& word);
    static HeckeElt longest(int ell);
    // c(d) = s_{ell-1} s_{ell-2} ... s_d; identity when d = ell.
    static HeckeElt c_elt(int ell, int d);
    // longest element of the submonoid generated by s_a .. s_{b-1}
    // (reverses the interval [a, b]).
    static HeckeElt interval_reversal(int ell, int a, int b);

    int ell() const { return perm_.ell(); }
    const Perm& perm() const { return perm_; }
    int length() const { return perm_.length(); }
    bool is_identity() const { return length() == 0; }

    HeckeElt demazure_gen(int i) const;          // *this  o  sigma_i
    HeckeElt demazure(const HeckeElt& v) const;  // *this  o  v
    HeckeElt inverse() const { return HeckeElt(perm_.inverse()); }

    std::vector<int> reduced_word() const;  // lexicographically smallest
    std::set<int> right_descents() const;

    bool operator==(const HeckeElt& o) const { return perm_ == o.perm_; }
    bool operator!=(const HeckeElt& o) const { return perm_ != o.perm_; }
    bool operator<(const HeckeElt& o) const { return perm_ < o.perm_; }

    // "id" or comma-separated canonical reduced word, e.g. "3,4,3"
    std::string to_string() const;
    // accepts "id", "w0", or a comma-separated generator word (need not be reduced)
    static HeckeElt parse(int ell, const std::string& s);

private:
    Perm perm_;
};

struct SortedPerms {
    std::vector<int> alpha_plus;  // weakly decreasing rearrangement
    HeckeElt p;                   // shortest w with w . alpha_plus = alpha
    HeckeElt p_long;              // longest such, = p * w0(stabilizer of alpha_plus)
};

SortedPerms sort_perms(const std::vector<int>& alpha);

// Fold the 0-Hecke action (swap positions i,i+1 when alpha_i >= alpha_{i+1})
// over a reduced word of w, rightmost generator first.
std::vector<int> hecke_action(const HeckeElt& w, std::vector<int> alpha);

}  // namespace nscat
