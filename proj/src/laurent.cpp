#include "nscat/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nscat {

std::string QPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        Int a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            if (a != 1) os << '*';
            os << 'q';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

LaurentPoly::LaurentPoly(int ell) : ell_(ell) {
    if (ell < 1) throw std::invalid_argument("LaurentPoly: ell must be positive");
}

LaurentPoly LaurentPoly::one(int ell) {
    LaurentPoly f(ell);
    f.terms_[ExpVec(ell, 0)] = QPoly(1);
    return f;
}

LaurentPoly LaurentPoly::monomial(ExpVec exp, QPoly c) {
    LaurentPoly f(static_cast<int>(exp.size()));
    if (!c.is_zero()) f.terms_[std::move(exp)] = std::move(c);
    return f;
}

QPoly LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QPoly() : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (ell_ != o.ell_) throw std::invalid_argument("LaurentPoly: mismatched ell");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (ell_ != o.ell_) throw std::invalid_argument("LaurentPoly: mismatched ell");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(ell_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.ell_ != b.ell_) throw std::invalid_argument("LaurentPoly: mismatched ell");
    LaurentPoly r(a.ell_);
    ExpVec e(a.ell_);
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) {
            for (int i = 0; i < a.ell_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(const QPoly& c) const {
    LaurentPoly r(ell_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::mul_monomial(const ExpVec& e, const QPoly& c) const {
    if (static_cast<int>(e.size()) != ell_)
        throw std::invalid_argument("mul_monomial: length mismatch");
    LaurentPoly r(ell_);
    if (c.is_zero()) return r;
    ExpVec key(ell_);
    for (const auto& [e1, v] : terms_) {
        for (int i = 0; i < ell_; ++i) key[i] = e1[i] + e[i];
        r.terms_[key] = v * c;
    }
    return r;
}

LaurentPoly LaurentPoly::mul_x_power(int var, int a) const {
    ExpVec e(ell_, 0);
    e[var - 1] = a;
    return mul_monomial(e);
}

QPoly LaurentPoly::eval_x_one() const {
    QPoly s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

int LaurentPoly::min_q_exp() const {
    if (terms_.empty()) throw std::logic_error("min_q_exp of zero polynomial");
    int m = terms_.begin()->second.min_exp();
    for (const auto& [e, c] : terms_) m = std::min(m, c.min_exp());
    return m;
}

LaurentPoly LaurentPoly::kill_vars_above(int keep) const {
    if (keep < 1 || keep > ell_) throw std::invalid_argument("kill_vars_above: bad keep");
    LaurentPoly r(keep);
    for (const auto& [e, c] : terms_) {
        bool kill = false;
        for (int i = keep; i < ell_; ++i) {
            if (e[i] < 0) throw std::domain_error("kill_vars_above: negative exponent");
            if (e[i] > 0) { kill = true; break; }
        }
        if (kill) continue;
        r.add_term(ExpVec(e.begin(), e.begin() + keep), c);
    }
    return r;
}

LaurentPoly LaurentPoly::extended(int new_ell) const {
    if (new_ell < ell_) throw std::invalid_argument("extended: new_ell too small");
    LaurentPoly r(new_ell);
    for (const auto& [e, c] : terms_) {
        ExpVec e2 = e;
        e2.resize(new_ell, 0);
        r.terms_[std::move(e2)] = c;
    }
    return r;
}

std::vector<std::tuple<int, ExpVec, Int>> LaurentPoly::sorted_terms() const {
    std::vector<std::tuple<int, ExpVec, Int>> out;
    for (const auto& [e, c] : terms_)
        for (const auto& [a, v] : c.coeffs()) out.emplace_back(a, e, v);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
        return std::get<1>(x) > std::get<1>(y);  // exponent vector lex descending
    });
    return out;
}

std::string LaurentPoly::to_string() const {
    auto ts = sorted_terms();
    if (ts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, e, v] : ts) {
        Int c = v;
        if (first) {
            if (c < 0) { os << '-'; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        std::vector<std::string> factors;
        if (c != 1) factors.push_back(c.str());
        if (a != 0) factors.push_back(a == 1 ? "q" : "q^" + std::to_string(a));
        for (int i = 0; i < ell_; ++i) {
            if (e[i] == 0) continue;
            std::string f = "x" + std::to_string(i + 1);
            if (e[i] != 1) f += "^" + std::to_string(e[i]);
            factors.push_back(f);
        }
        if (factors.empty()) { os << "1"; continue; }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << '*';
            os << factors[i];
        }
    }
    return os.str();
}

LaurentPoly s_act(int i, const LaurentPoly& f) {
    if (i < 1 || i >= f.ell()) throw std::out_of_range("s_act: index out of range");
    LaurentPoly r(f.ell());
    for (const auto& [e, c] : f.terms()) {
        ExpVec e2 = e;
        std::swap(e2[i - 1], e2[i]);
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly pi(int i, const LaurentPoly& f) {
    if (i < 1 || i >= f.ell()) throw std::out_of_range("pi: index out of range");
    // On a monomial with exponents (c, d) at positions (i, i+1):
    //   c >= d:  sum_{k=d}^{c}   x_i^k x_{i+1}^{c+d-k}
    //   c <  d: -sum_{k=c+1}^{d-1} x_i^k x_{i+1}^{c+d-k}
    LaurentPoly r(f.ell());
    for (const auto& [e, coef] : f.terms()) {
        int c = e[i - 1], d = e[i];
        ExpVec e2 = e;
        if (c >= d) {
            for (int k = d; k <= c; ++k) {
                e2[i - 1] = k;
                e2[i] = c + d - k;
                r.add_term(e2, coef);
            }
        } else {
            for (int k = c + 1; k <= d - 1; ++k) {
                e2[i - 1] = k;
                e2[i] = c + d - k;
                r.add_term(e2, -coef);
            }
        }
    }
    return r;
}

LaurentPoly pi_hat(int i, const LaurentPoly& f) { return pi(i, f) - f; }

LaurentPoly pi_word(const std::vector<int>& word, LaurentPoly f) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = pi(*it, f);
    return f;
}

LaurentPoly pi_hat_word(const std::vector<int>& word, LaurentPoly f) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = pi_hat(*it, f);
    return f;
}

LaurentPoly phi(const LaurentPoly& f) {
    int n = f.ell();
    LaurentPoly r(n);
    ExpVec e2(n);
    for (const auto& [e, c] : f.terms()) {
        e2[0] = e[n - 1];
        for (int i = 1; i < n; ++i) e2[i] = e[i - 1];
        r.add_term(e2, c.shifted(e[n - 1]));
    }
    return r;
}

}  // namespace nscat
