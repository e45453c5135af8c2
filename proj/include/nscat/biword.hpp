#pragma once

#include <string>
#include <vector>

namespace nscat {

// Element of B^mu = B^{1,mu_p} x ... x B^{1,mu_1} with letters in [ell].
// Factors are stored left to right, i.e. factor(0) is the block b^p and
// factor(p-1) is b^1; the bottom word is their concatenation.
class Biword {
public:
    Biword(int ell, std::vector<int> mu, std::vector<std::vector<int>> factors);

    static Biword seed(int ell, int s);  // single block 1^s, mu = (s)

    int ell() const { return ell_; }
    int p() const { return static_cast<int>(mu_.size()); }
    const std::vector<int>& mu() const { return mu_; }
    const std::vector<int>& factor(int t) const { return factors_[t]; }  // 0-based
    const std::vector<int>& block(int i) const { return factors_[p() - i]; }  // b^i
    const std::vector<std::vector<int>>& factors() const { return factors_; }

    std::vector<int> bottom_word() const;
    std::vector<int> content() const;  // ell entries
    std::string label() const;         // bottom word as digits

    Biword with_factor(int t, std::vector<int> word) const;
    // tensor a new rightmost block 1^s (becomes block 1)
    Biword append_block_of_ones(int s) const;

    bool operator==(const Biword& o) const {
        return ell_ == o.ell_ && mu_ == o.mu_ && factors_ == o.factors_;
    }
    bool operator<(const Biword& o) const {
        if (factors_ != o.factors_) return factors_ < o.factors_;
        return mu_ < o.mu_;
    }

private:
    int ell_;
    std::vector<int> mu_;
    std::vector<std::vector<int>> factors_;
};

}  // namespace nscat
