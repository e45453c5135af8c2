#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace nscat {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in q with arbitrary-precision integer coefficients.
// Exponents may be negative (needed for the E <-> tE substitution q -> 1/q).
class QPoly {
public:
    QPoly() = default;
    QPoly(long c) { if (c != 0) c_[0] = c; }
    QPoly(Int c) { if (c != 0) c_[0] = std::move(c); }

    static QPoly q_power(int a, Int c = Int(1)) {
        QPoly r;
        if (c != 0) r.c_[a] = std::move(c);
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Int>& coeffs() const { return c_; }

    Int coeff(int a) const {
        auto it = c_.find(a);
        return it == c_.end() ? Int(0) : it->second;
    }

    int min_exp() const {
        if (c_.empty()) throw std::logic_error("min_exp of zero QPoly");
        return c_.begin()->first;
    }
    int max_exp() const {
        if (c_.empty()) throw std::logic_error("max_exp of zero QPoly");
        return c_.rbegin()->first;
    }

    QPoly& operator+=(const QPoly& o) {
        for (const auto& [a, c] : o.c_) {
            Int& v = c_[a];
            v += c;
            if (v == 0) c_.erase(a);
        }
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        for (const auto& [a, c] : o.c_) {
            Int& v = c_[a];
            v -= c;
            if (v == 0) c_.erase(a);
        }
        return *this;
    }
    QPoly operator-() const {
        QPoly r;
        for (const auto& [a, c] : c_) r.c_[a] = -c;
        return r;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
    friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        for (const auto& [e1, c1] : a.c_)
            for (const auto& [e2, c2] : b.c_) {
                Int& v = r.c_[e1 + e2];
                v += c1 * c2;
                if (v == 0) r.c_.erase(e1 + e2);
            }
        return r;
    }
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return c_ != o.c_; }
    bool operator<(const QPoly& o) const { return c_ < o.c_; }

    // multiply by q^a
    QPoly shifted(int a) const {
        QPoly r;
        for (const auto& [e, c] : c_) r.c_[e + a] = c;
        return r;
    }

    // q -> q^{-1}
    QPoly inverted_q() const {
        QPoly r;
        for (const auto& [e, c] : c_) r.c_[-e] = c;
        return r;
    }

    Int eval_one() const {
        Int s = 0;
        for (const auto& [e, c] : c_) s += c;
        return s;
    }

    std::string to_string() const;

private:
    std::map<int, Int> c_;  // exponent -> nonzero coefficient
};

}  // namespace nscat
