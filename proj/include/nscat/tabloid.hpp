#pragma once

#include "nscat/hecke.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nscat {

// Filling of a composition diagram with weakly increasing rows, ell rows
// total (empty rows allowed), letters >= 1.
class Tabloid {
public:
    explicit Tabloid(int ell) : rows_(ell) {}
    Tabloid(int ell, std::vector<std::vector<int>> rows);

    int ell() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& row(int i) const { return rows_[i - 1]; }  // 1-based
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    std::vector<int> shape() const;
    // letter multiplicities c_1..c_p; p defaults to the largest letter
    std::vector<int> content(int p = 0) const;
    int max_letter() const;
    bool is_empty() const;
    bool is_tableau() const;  // partition shape, strictly increasing columns
    std::vector<int> reading_word() const;  // rows ell..1 concatenated

    // rows joined by "/": "112//3"; trailing empty rows keep their slashes
    std::string to_string() const;
    static Tabloid parse(const std::string& s);

    bool operator==(const Tabloid& o) const { return rows_ == o.rows_; }
    bool operator!=(const Tabloid& o) const { return rows_ != o.rows_; }
    bool operator<(const Tabloid& o) const { return rows_ < o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

// Schensted insertion tableau of a word (row insertion, left to right),
// returned with exactly ell rows.
Tabloid insert_word(const std::vector<int>& word, int ell);

// P(T): insertion tableau of the row reading word T^ell ... T^1.
Tabloid insertion_P(const Tabloid& T);

// Partial insertion: replace rows i, i+1 by the tableau P(T^{i+1} T^i).
Tabloid partial_insert_Pi(int i, const Tabloid& T);

// Fold P_i along a word of w, rightmost generator first.
Tabloid partial_insert_Pw(const HeckeElt& w, const Tabloid& T);

// Column insert row ell into the tableau T^{[i, ell-1]}; rows 1..i-1 fixed.
Tabloid column_insert_Pil(int i, const Tabloid& T);

// Katabolism: strip 1's, rotate row 1 to the bottom, decrement letters.
Tabloid kat(const Tabloid& T);

bool has_ones_outside_first_row(const Tabloid& T);

bool is_w_katabolizable(const Tabloid& T, const std::vector<HeckeElt>& w_list);

// As above but records each intermediate tabloid for CLI tracing.
struct KatabolismStep {
    std::string op;  // "P_w^{-1}" or "kat"
    Tabloid result;
};
bool is_w_katabolizable_trace(const Tabloid& T, const std::vector<HeckeElt>& w_list,
                              std::vector<KatabolismStep>& steps);

// Streamlined test for tableaux (valid when n_{i+1} >= n_i - 1).
bool is_n_katabolizable(const Tabloid& U, const std::vector<int>& n);

// Lascoux-Schutzenberger charge; words must have partition content.
long charge(const std::vector<int>& word);
long charge(const Tabloid& T);

bool is_row_frank(const Tabloid& T);

// Upward Bruhat covers of alpha in Z^ell: pairs ((i,k), s_{ik} alpha).
std::vector<std::pair<std::pair<int, int>, std::vector<int>>>
bruhat_covers_up(const std::vector<int>& alpha);

// S'_{ij} = inv o S_{ij} o inv and the extreme katabolizability test
// (implemented with the crystal reflection operators).
Tabloid reflect_Sij_tabloid(int i, int j, const Tabloid& T);
bool is_extreme_katabolizable(const Tabloid& T, const std::vector<HeckeElt>& w_list);

}  // namespace nscat
