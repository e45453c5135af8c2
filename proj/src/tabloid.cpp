#include "nscat/tabloid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nscat {

Tabloid::Tabloid(int ell, std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != ell)
        throw std::invalid_argument("Tabloid: wrong number of rows");
    for (const auto& r : rows_) {
        if (!std::is_sorted(r.begin(), r.end()))
            throw std::invalid_argument("Tabloid: rows must weakly increase");
        if (!r.empty() && r.front() < 1)
            throw std::invalid_argument("Tabloid: letters must be positive");
    }
}

std::vector<int> Tabloid::shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return s;
}

std::vector<int> Tabloid::content(int p) const {
    p = std::max(p, max_letter());
    std::vector<int> c(p, 0);
    for (const auto& r : rows_)
        for (int x : r) ++c[x - 1];
    return c;
}

int Tabloid::max_letter() const {
    int m = 0;
    for (const auto& r : rows_)
        if (!r.empty()) m = std::max(m, r.back());
    return m;
}

bool Tabloid::is_empty() const {
    for (const auto& r : rows_)
        if (!r.empty()) return false;
    return true;
}

bool Tabloid::is_tableau() const {
    for (size_t i = 1; i < rows_.size(); ++i) {
        if (rows_[i].size() > rows_[i - 1].size()) return false;
        for (size_t c = 0; c < rows_[i].size(); ++c)
            if (rows_[i][c] <= rows_[i - 1][c]) return false;
    }
    return true;
}

std::vector<int> Tabloid::reading_word() const {
    std::vector<int> w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

std::string Tabloid::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << '/';
        for (int x : rows_[i]) {
            if (x > 9) throw std::domain_error("Tabloid::to_string: letters above 9");
            os << x;
        }
    }
    return os.str();
}

Tabloid Tabloid::parse(const std::string& s) {
    std::vector<std::vector<int>> rows;
    std::vector<int> cur;
    for (char ch : s) {
        if (ch == '/') {
            rows.push_back(cur);
            cur.clear();
        } else if (ch >= '1' && ch <= '9') {
            cur.push_back(ch - '0');
        } else {
            throw std::invalid_argument("Tabloid::parse: bad character");
        }
    }
    rows.push_back(cur);
    int ell = static_cast<int>(rows.size());
    return Tabloid(ell, std::move(rows));
}

namespace {

// Row-insert a single letter; rows is a tableau in row form.
void row_insert(std::vector<std::vector<int>>& rows, int x) {
    for (auto& r : rows) {
        auto it = std::upper_bound(r.begin(), r.end(), x);
        if (it == r.end()) {
            r.push_back(x);
            return;
        }
        std::swap(*it, x);
    }
    rows.push_back({x});
}

// Column-insert a single letter: bump the topmost entry >= x in each column.
void column_insert(std::vector<std::vector<int>>& rows, int x) {
    size_t c = 0;
    while (true) {
        size_t r = 0;
        while (r < rows.size() && rows[r].size() > c && rows[r][c] < x) ++r;
        if (r == rows.size() || rows[r].size() <= c) {
            if (r == rows.size()) rows.push_back({});
            if (rows[r].size() != c) throw std::logic_error("column_insert: ragged placement");
            rows[r].push_back(x);
            return;
        }
        std::swap(rows[r][c], x);
        ++c;
    }
}

Tabloid to_tabloid(std::vector<std::vector<int>> rows, int ell) {
    if (static_cast<int>(rows.size()) > ell)
        throw std::logic_error("insertion produced more than ell rows");
    rows.resize(ell);
    return Tabloid(ell, std::move(rows));
}

}  // namespace

Tabloid insert_word(const std::vector<int>& word, int ell) {
    std::vector<std::vector<int>> rows;
    for (int x : word) row_insert(rows, x);
    return to_tabloid(std::move(rows), ell);
}

Tabloid insertion_P(const Tabloid& T) { return insert_word(T.reading_word(), T.ell()); }

Tabloid partial_insert_Pi(int i, const Tabloid& T) {
    if (i < 1 || i >= T.ell()) throw std::out_of_range("partial_insert_Pi: index range");
    std::vector<int> word = T.row(i + 1);
    word.insert(word.end(), T.row(i).begin(), T.row(i).end());
    std::vector<std::vector<int>> inserted;
    for (int x : word) row_insert(inserted, x);
    if (inserted.size() > 2) throw std::logic_error("P_i: more than two rows");
    inserted.resize(2);
    auto rows = T.rows();
    rows[i - 1] = inserted[0];
    rows[i] = inserted[1];
    return Tabloid(T.ell(), std::move(rows));
}

Tabloid partial_insert_Pw(const HeckeElt& w, const Tabloid& T) {
    auto word = w.reduced_word();
    Tabloid cur = T;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = partial_insert_Pi(*it, cur);
    return cur;
}

Tabloid column_insert_Pil(int i, const Tabloid& T) {
    int ell = T.ell();
    if (i < 1 || i > ell) throw std::out_of_range("column_insert_Pil: index range");
    std::vector<std::vector<int>> mid(T.rows().begin() + (i - 1), T.rows().begin() + (ell - 1));
    while (!mid.empty() && mid.back().empty()) mid.pop_back();
    Tabloid midtab(std::max<int>(1, static_cast<int>(mid.size())),
                   mid.empty() ? std::vector<std::vector<int>>{{}} : mid);
    if (!midtab.is_tableau())
        throw std::invalid_argument("column_insert_Pil: T^{[i,ell-1]} is not a tableau");
    const auto& last = T.row(ell);
    for (auto it = last.rbegin(); it != last.rend(); ++it) column_insert(mid, *it);
    auto rows = T.rows();
    for (int r = i; r <= ell; ++r)
        rows[r - 1] = (r - i < static_cast<int>(mid.size())) ? mid[r - i] : std::vector<int>{};
    return Tabloid(ell, std::move(rows));
}

Tabloid kat(const Tabloid& T) {
    int ell = T.ell();
    std::vector<std::vector<int>> rows(ell);
    for (int r = 1; r <= ell; ++r) {
        std::vector<int> stripped;
        for (int x : T.row(r))
            if (x != 1) stripped.push_back(x - 1);
        int target = (r == 1) ? ell : r - 1;
        rows[target - 1] = std::move(stripped);
    }
    return Tabloid(ell, std::move(rows));
}

bool has_ones_outside_first_row(const Tabloid& T) {
    for (int r = 2; r <= T.ell(); ++r)
        if (!T.row(r).empty() && T.row(r).front() == 1) return true;
    return false;
}

bool is_w_katabolizable(const Tabloid& T, const std::vector<HeckeElt>& w_list) {
    Tabloid cur = T;
    for (const auto& w : w_list) {
        cur = partial_insert_Pw(w.inverse(), cur);
        if (has_ones_outside_first_row(cur)) return false;
        cur = kat(cur);
    }
    return cur.is_empty();
}

bool is_w_katabolizable_trace(const Tabloid& T, const std::vector<HeckeElt>& w_list,
                              std::vector<KatabolismStep>& steps) {
    Tabloid cur = T;
    for (const auto& w : w_list) {
        cur = partial_insert_Pw(w.inverse(), cur);
        steps.push_back({"P_{(" + w.to_string() + ")^-1}", cur});
        if (has_ones_outside_first_row(cur)) return false;
        cur = kat(cur);
        steps.push_back({"kat", cur});
    }
    return cur.is_empty();
}

bool is_n_katabolizable(const Tabloid& U, const std::vector<int>& n) {
    if (!U.is_tableau()) throw std::invalid_argument("is_n_katabolizable: not a tableau");
    Tabloid cur = U;
    for (int ni : n) {
        cur = column_insert_Pil(ni, kat(cur));
        if (has_ones_outside_first_row(cur)) return false;
    }
    return true;
}

long charge(const std::vector<int>& word) {
    std::vector<int> content;
    for (int x : word) {
        if (x < 1) throw std::invalid_argument("charge: letters must be positive");
        if (x > static_cast<int>(content.size())) content.resize(x, 0);
        ++content[x - 1];
    }
    for (size_t i = 1; i < content.size(); ++i)
        if (content[i] > content[i - 1])
            throw std::invalid_argument("charge: word does not have partition content");

    std::vector<int> w = word;
    long total = 0;
    while (!w.empty()) {
        int n = static_cast<int>(w.size());
        // rightmost 1, then repeatedly the first r+1 strictly left, cyclically
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (w[i] == 1) { p = i; break; }
        if (p < 0) throw std::logic_error("charge: no 1 in nonempty word");
        std::vector<int> taken{p};
        int r = 1;
        long idx = 0;
        while (true) {
            int found = -1;
            for (int step = 1; step < n; ++step) {
                int j = (p - step % n + n) % n;
                if (w[j] == r + 1) { found = j; break; }
            }
            if (found < 0) break;
            if (found > p) ++idx;
            total += idx;
            taken.push_back(found);
            p = found;
            ++r;
        }
        std::sort(taken.begin(), taken.end(), std::greater<int>());
        for (int t : taken) w.erase(w.begin() + t);
    }
    return total;
}

long charge(const Tabloid& T) { return charge(T.reading_word()); }

bool is_row_frank(const Tabloid& T) {
    std::vector<int> a = T.shape();
    std::vector<int> b = insertion_P(T).shape();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<std::pair<std::pair<int, int>, std::vector<int>>>
bruhat_covers_up(const std::vector<int>& alpha) {
    int n = static_cast<int>(alpha.size());
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> out;
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            int ai = alpha[i - 1], ak = alpha[k - 1];
            if (ai <= ak) continue;
            bool blocked = false;
            for (int j = i + 1; j < k; ++j) {
                int aj = alpha[j - 1];
                if (aj >= ak && aj <= ai) { blocked = true; break; }
            }
            if (blocked) continue;
            std::vector<int> beta = alpha;
            std::swap(beta[i - 1], beta[k - 1]);
            out.push_back({{i, k}, std::move(beta)});
        }
    return out;
}

}  // namespace nscat
