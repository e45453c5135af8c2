#include "nscat/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nscat {

std::vector<std::vector<int>> partitions(int n, int max_parts, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int part = std::min(rem, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(rem - part, part);
            cur.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

std::vector<Tabloid> ssyt_of_shape(const std::vector<int>& lambda, int ell) {
    std::vector<Tabloid> out;
    std::vector<std::vector<int>> rows(ell);
    int nrows = 0;
    while (nrows < static_cast<int>(lambda.size()) && lambda[nrows] > 0) ++nrows;
    if (nrows > ell) return out;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == nrows) {
            out.emplace_back(ell, rows);
            return;
        }
        if (c == lambda[r]) {
            rec(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);                       // row weak
        if (r > 0 && c < static_cast<int>(rows[r - 1].size()))
            lo = std::max(lo, rows[r - 1][c] + 1);                          // column strict
        for (int v = lo; v <= ell; ++v) {
            rows[r].push_back(v);
            rec(r, c + 1);
            rows[r].pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::vector<Tabloid> ssyt_of_content(const std::vector<int>& mu, int ell) {
    // build by horizontal strips, one letter at a time
    std::vector<Tabloid> out;
    std::vector<std::vector<int>> rows(ell);
    int p = static_cast<int>(mu.size());
    // place letter x: choose how many x's go in each row, top rows first;
    // the new boxes must form a horizontal strip on the current shape.
    std::function<void(int)> place = [&](int x) {
        if (x > p) {
            out.emplace_back(ell, rows);
            return;
        }
        std::vector<int> before(ell);
        for (int r = 0; r < ell; ++r) before[r] = static_cast<int>(rows[r].size());
        std::function<void(int, int)> strip = [&](int r, int rem) {
            if (rem == 0) {
                // rows below r stay untouched
                place(x + 1);
                return;
            }
            if (r < 0) return;
            int cap;
            if (r == 0) cap = rem;
            else cap = std::max(0, before[r - 1] - before[r]);  // keep shape a partition + strip
            for (int k = std::min(cap, rem); k >= 0; --k) {
                for (int t = 0; t < k; ++t) rows[r].push_back(x);
                // strict columns: new boxes in row r must not sit under new boxes
                // of the same letter in row r-1; placing top-down from bottom row
                // upward avoids this because row r-1 additions come later and are
                // bounded by before[r-2] - before[r-1] ... enforced via cap check:
                bool ok = true;
                if (r > 0 && k > 0) {
                    // boxes occupy columns before[r]..before[r]+k-1; row r-1 must
                    // already cover these columns with entries < x (they do, since
                    // letters so far are < x and row r-1 has length before[r-1])
                    if (before[r] + k > before[r - 1]) ok = false;
                }
                if (ok) strip(r - 1, rem - k);
                for (int t = 0; t < k; ++t) rows[r].pop_back();
            }
        };
        strip(ell - 1, mu[x - 1]);
    };
    place(1);
    return out;
}

std::vector<Tabloid> tabloids_of_content(const std::vector<int>& mu, int ell) {
    std::vector<Tabloid> out;
    std::vector<std::vector<int>> rows(ell);
    int p = static_cast<int>(mu.size());
    std::function<void(int)> place = [&](int x) {
        if (x > p) {
            auto sorted_rows = rows;
            for (auto& r : sorted_rows) std::sort(r.begin(), r.end());
            out.emplace_back(ell, std::move(sorted_rows));
            return;
        }
        std::function<void(int, int)> distribute = [&](int r, int rem) {
            if (r == ell - 1) {
                for (int t = 0; t < rem; ++t) rows[r].push_back(x);
                place(x + 1);
                for (int t = 0; t < rem; ++t) rows[r].pop_back();
                return;
            }
            for (int k = 0; k <= rem; ++k) {
                for (int t = 0; t < k; ++t) rows[r].push_back(x);
                distribute(r + 1, rem - k);
                for (int t = 0; t < k; ++t) rows[r].pop_back();
            }
        };
        distribute(0, mu[x - 1]);
    };
    place(1);
    return out;
}

LaurentPoly schur_poly(const std::vector<int>& lambda, int ell) {
    LaurentPoly f(ell);
    for (const auto& T : ssyt_of_shape(lambda, ell))
        f += LaurentPoly::monomial(T.content(ell));
    return f;
}

}  // namespace nscat
