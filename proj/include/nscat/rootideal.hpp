#pragma once

#include "nscat/hecke.hpp"

#include <set>
#include <utility>
#include <vector>

namespace nscat {

// Upper order ideal of the positive roots {(i,j) : 1 <= i < j <= ell},
// stored by its nr vector: nr_i = #{j in {i..ell} : (i,j) not in Psi}.
// Row i holds roots in columns i + nr_i .. ell; nr_ell is forced to 1.
class RootIdeal {
public:
    // Accepts ell or ell-1 entries (the forced trailing 1 may be omitted).
    RootIdeal(int ell, std::vector<int> nr);

    static RootIdeal full(int ell);         // all positive roots
    static RootIdeal empty_ideal(int ell);  // no roots
    static RootIdeal from_roots(int ell, const std::set<std::pair<int, int>>& roots);

    // Delta(eta): roots above the block diagonal with block sizes eta, ell = |eta|.
    static RootIdeal parabolic(const std::vector<int>& eta);
    // Delta(eta) padded to length ell by adjoining all roots (i,j) with j > |eta|.
    static RootIdeal parabolic_padded(const std::vector<int>& eta, int ell);
    // Delta'_ell(eta): Delta(eta) minus the trapezoids between consecutive
    // blocks, padded to length ell >= |eta|.
    static RootIdeal delta_prime(const std::vector<int>& eta, int ell);
    // Delta^k(mu): nr_i = min(k - mu_i + 1, ell - i + 1), ell = len(mu).
    static RootIdeal delta_k(const std::vector<int>& mu, int k);

    int ell() const { return ell_; }
    const std::vector<int>& nr() const { return nr_; }
    bool contains(int i, int j) const;
    int row_size(int i) const { return ell_ - i + 1 - nr_[i - 1]; }
    size_t size() const;
    bool empty() const { return size() == 0; }

    std::set<std::pair<int, int>> roots() const;
    std::vector<std::pair<int, int>> removable_roots() const;
    RootIdeal remove(std::pair<int, int> root) const;

    // Remove the first row, shift up-left, add a full last column.
    RootIdeal rotate() const;

    // (c(nr_1), ..., c(nr_{ell-1}))
    std::vector<HeckeElt> ns_words() const;

    bool is_tame(const HeckeElt& w) const;

    bool operator==(const RootIdeal& o) const { return ell_ == o.ell_ && nr_ == o.nr_; }
    bool operator<(const RootIdeal& o) const { return nr_ < o.nr_; }

private:
    int ell_;
    std::vector<int> nr_;
    void validate() const;
};

// All root ideals in Delta^+_ell (Catalan many); used by exhaustive tests.
std::vector<RootIdeal> all_root_ideals(int ell);

}  // namespace nscat
