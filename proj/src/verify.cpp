#include "nscat/verify.hpp"

#include "nscat/catalan.hpp"
#include "nscat/crystal.hpp"
#include "nscat/enumerate.hpp"
#include "nscat/macdonald.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace nscat {

namespace {

using Rng = std::mt19937_64;

int rint(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<int> random_partition(Rng& rng, int max_total, int max_parts) {
    std::vector<int> mu;
    int rem = rint(rng, 0, max_total), cap = rem;
    while (rem > 0 && static_cast<int>(mu.size()) < max_parts) {
        int part = rint(rng, 1, std::min(rem, cap));
        mu.push_back(part);
        cap = part;
        rem -= part;
    }
    return mu;
}

RootIdeal random_root_ideal(Rng& rng, int ell) {
    std::vector<int> nr(ell);
    nr[ell - 1] = 1;
    for (int i = ell - 1; i >= 1; --i)
        nr[i - 1] = rint(rng, 1, std::min(ell - i + 1, nr[i] + 1));
    return RootIdeal(ell, nr);
}

HeckeElt random_hecke(Rng& rng, int ell) {
    std::vector<int> img(ell);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return HeckeElt(Perm(img));
}

HeckeElt random_tame(Rng& rng, const RootIdeal& psi) {
    int ell = psi.ell();
    int a = psi.nr()[0];
    HeckeElt rev = (a + 1 <= ell) ? HeckeElt::interval_reversal(ell, a + 1, ell)
                                  : HeckeElt(ell);
    return random_hecke(rng, ell).demazure(rev);
}

LaurentPoly random_poly(Rng& rng, int ell, int max_terms, int min_exp, int max_exp) {
    LaurentPoly f(ell);
    int terms = rint(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(ell);
        for (int& x : e) x = rint(rng, min_exp, max_exp);
        int c = rint(rng, -4, 4);
        if (c == 0) c = 1;
        f += LaurentPoly::monomial(e, QPoly::q_power(rint(rng, 0, 3), c));
    }
    return f;
}

std::vector<int> random_content_word(Rng& rng, int max_total) {
    auto lam = random_partition(rng, max_total, max_total);
    std::vector<int> w;
    for (size_t i = 0; i < lam.size(); ++i)
        for (int t = 0; t < lam[i]; ++t) w.push_back(static_cast<int>(i) + 1);
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

std::vector<int> random_reduced_word(Rng& rng, const HeckeElt& w) {
    // random left-descent peeling
    std::vector<int> word;
    Perm p = w.perm();
    while (true) {
        Perm inv = p.inverse();
        std::vector<int> descents;
        for (int i = 1; i < p.ell(); ++i)
            if (inv(i) > inv(i + 1)) descents.push_back(i);
        if (descents.empty()) break;
        int i = descents[rint(rng, 0, static_cast<int>(descents.size()) - 1)];
        word.push_back(i);
        p = p.times_s_left(i);
    }
    return word;
}

std::string vec_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

using Check = std::function<bool(Rng&, long, std::string&)>;

VerifyReport drive(const std::string& name, const VerifyOptions& opt, const Check& check) {
    VerifyReport rep;
    rep.suite = name;
    rep.seed = opt.seed;
    Rng rng(opt.seed);
    for (long t = 0; t < opt.trials; ++t) {
        std::string why;
        ++rep.trials;
        if (!check(rng, t, why)) {
            ++rep.failures;
            if (rep.counterexamples.size() < 10)
                rep.counterexamples.push_back("trial " + std::to_string(t) + ": " + why);
        }
    }
    return rep;
}

VerifyReport suite_rotation(const VerifyOptions& opt) {
    return drive("rotation", opt, [&](Rng& rng, long, std::string& why) {
        int ell = opt.ell;
        RootIdeal psi = random_root_ideal(rng, ell);
        ExpVec gamma(ell);
        gamma[0] = rint(rng, 0, 4);
        for (int i = 1; i < ell; ++i) gamma[i] = rint(rng, -2, 4);
        int a = psi.nr()[0];
        HeckeElt wa1 = (a + 1 <= ell) ? HeckeElt::interval_reversal(ell, a + 1, ell)
                                      : HeckeElt(ell);
        HeckeElt wa = HeckeElt::interval_reversal(ell, a, ell);
        LaurentPoly lhs = catalan_recursive(psi, gamma, wa1);
        ExpVec rg(gamma.begin() + 1, gamma.end());
        rg.push_back(0);
        LaurentPoly rhs = phi(catalan_recursive(psi.rotate(), rg, wa)).mul_x_power(1, gamma[0]);
        if (lhs == rhs) return true;
        why = "nr=" + vec_str(psi.nr()) + " gamma=" + vec_str(gamma);
        return false;
    });
}

VerifyReport suite_routes(const VerifyOptions& opt) {
    return drive("routes", opt, [&](Rng& rng, long, std::string& why) {
        int ell = opt.ell;
        RootIdeal psi = random_root_ideal(rng, ell);
        ExpVec gamma(ell);
        for (int& g : gamma) g = rint(rng, 0, 4);
        HeckeElt w = random_tame(rng, psi);
        LaurentPoly a = catalan_recursive(psi, gamma, w);
        LaurentPoly b = catalan_rotation(psi, gamma, w);
        if (a == b) return true;
        why = "nr=" + vec_str(psi.nr()) + " gamma=" + vec_str(gamma) + " w=" + w.to_string();
        return false;
    });
}

VerifyReport suite_katabolism_bijection(const VerifyOptions& opt) {
    return drive("katabolism-bijection", opt, [&](Rng& rng, long, std::string& why) {
        int ell = opt.ell;
        auto mu = random_partition(rng, opt.maxmu, opt.maxmu);
        if (mu.empty()) mu.push_back(1);
        std::vector<HeckeElt> ws;
        for (size_t i = 0; i < mu.size(); ++i) ws.push_back(random_hecke(rng, ell));
        DarkCrystal D = dark(ell, mu, ws);
        std::set<Biword> expected;
        for (const auto& T : tabloids_of_content(mu, ell)) {
            if (!is_w_katabolizable(T, ws)) continue;
            Biword b = inv(T, ell, static_cast<int>(mu.size()));
            if (b.content() != T.shape()) {
                why = "inv does not take shape to content at T=" + T.to_string();
                return false;
            }
            expected.insert(std::move(b));
        }
        std::set<Biword> got(D.elements.begin(), D.elements.end());
        if (expected == got) return true;
        std::ostringstream os;
        os << "mu=" << vec_str(mu) << " w=(";
        for (size_t i = 0; i < ws.size(); ++i) os << (i ? ";" : "") << ws[i].to_string();
        os << "): " << expected.size() << " katabolizable vs " << got.size() << " crystal";
        why = os.str();
        return false;
    });
}

VerifyReport suite_charge_axioms(const VerifyOptions& opt) {
    return drive("charge-axioms", opt, [&](Rng& rng, long t, std::string& why) {
        int mode = static_cast<int>(t % 4);
        if (mode == 0) {  // C1
            if (charge(std::vector<int>{}) == 0) return true;
            why = "charge(empty) != 0";
            return false;
        }
        if (mode == 1) {  // C2: u = v 1^{lambda_1}
            auto w = random_content_word(rng, opt.maxsize);
            std::vector<int> v, vm;
            int ones = 0;
            for (int x : w)
                if (x == 1) ++ones;
                else v.push_back(x);
            std::vector<int> u = v;
            u.insert(u.end(), ones, 1);
            for (int x : v) vm.push_back(x - 1);
            if (charge(u) == charge(vm)) return true;
            why = "C2 at " + vec_str(u);
            return false;
        }
        if (mode == 2) {  // C3: charge(vx) = charge(xv) + 1 for x != 1
            auto u = random_content_word(rng, opt.maxsize);
            if (u.empty() || u.back() == 1) return true;  // vacuous draw
            std::vector<int> rot;
            rot.push_back(u.back());
            rot.insert(rot.end(), u.begin(), u.end() - 1);
            if (charge(u) == charge(rot) + 1) return true;
            why = "C3 at " + vec_str(u);
            return false;
        }
        // C4: invariance under an elementary Knuth move.
        // K1: y x z <-> y z x for x < y <= z (swap the last two letters);
        // K2: x z y <-> z x y for x <= y < z (swap the first two letters).
        auto u = random_content_word(rng, opt.maxsize);
        int n = static_cast<int>(u.size());
        std::vector<std::pair<int, bool>> moves;  // (start, swap_last_two)
        for (int s = 0; s + 2 < n; ++s) {
            int a = u[s], b = u[s + 1], c = u[s + 2];
            if ((b < a && a <= c) || (c < a && a <= b)) moves.push_back({s, true});
            if ((a <= c && c < b) || (b <= c && c < a)) moves.push_back({s, false});
        }
        if (moves.empty()) return true;  // vacuous draw
        auto [s, last_two] = moves[rint(rng, 0, static_cast<int>(moves.size()) - 1)];
        std::vector<int> v = u;
        if (last_two) std::swap(v[s + 1], v[s + 2]);
        else std::swap(v[s], v[s + 1]);
        if (charge(u) == charge(v)) return true;
        why = "C4 at " + vec_str(u) + " -> " + vec_str(v);
        return false;
    });
}

VerifyReport suite_key_oracle(const VerifyOptions& opt) {
    return drive("key-oracle", opt, [&](Rng& rng, long, std::string& why) {
        int ell = std::min(opt.ell, 3);
        LaurentPoly f = random_poly(rng, ell, 4, -2, 3);
        KeyExpansion ke = expand_keys(f);
        if (ke.reconstruct() != f) {
            why = "reconstruction failed for " + f.to_string();
            return false;
        }
        // collect the q-column for each alpha and compare with the oracle
        std::map<ExpVec, QPoly> by_alpha;
        for (const auto& [qa, c] : ke.terms)
            by_alpha[qa.second] += QPoly::q_power(qa.first, c);
        for (const auto& [alpha, expect] : by_alpha) {
            if (key_coeff_ct_oracle(f, alpha) != expect) {
                why = "oracle mismatch at alpha=" + vec_str(alpha);
                return false;
            }
        }
        ExpVec probe(ell);
        for (int& x : probe) x = rint(rng, -2, 3);
        if (!by_alpha.count(probe) && !key_coeff_ct_oracle(f, probe).is_zero()) {
            why = "oracle nonzero at absent alpha=" + vec_str(probe);
            return false;
        }
        return true;
    });
}

VerifyReport suite_kostka_triple(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "kostka-triple";
    rep.seed = opt.seed;
    int ell = opt.ell;
    for (int n = 1; n <= opt.maxmu; ++n) {
        for (const auto& mu : partitions(n, ell, n)) {
            ++rep.trials;
            auto res = catalan_full(RootIdeal::full(ell), [&] {
                ExpVec g = mu;
                g.resize(ell, 0);
                return g;
            }(), HeckeElt::longest(ell));
            // charge-weighted tableau sum, grouped by shape
            SchurExpansion tableau_sum;
            for (const auto& U : ssyt_of_content(mu, ell)) {
                std::vector<int> lam = U.shape();
                while (!lam.empty() && lam.back() == 0) lam.pop_back();
                tableau_sum[{static_cast<int>(charge(U)), lam}] += 1;
            }
            bool ok = (*res.schur_expansion == tableau_sum);
            if (ok) {
                // compare against the q-Kostant alternating sum, per lambda
                std::map<std::vector<int>, QPoly> by_lambda;
                for (const auto& [ql, c] : *res.schur_expansion)
                    by_lambda[ql.second] += QPoly::q_power(ql.first, c);
                for (const auto& lam : partitions(n, ell, n)) {
                    QPoly kf = kostka_foulkes_qkostant(lam, mu, ell);
                    auto it = by_lambda.find(lam);
                    QPoly have = (it == by_lambda.end()) ? QPoly() : it->second;
                    if (kf != have) { ok = false; break; }
                }
            }
            if (!ok) {
                ++rep.failures;
                if (rep.counterexamples.size() < 10)
                    rep.counterexamples.push_back("mu=" + vec_str(mu));
            }
        }
    }
    return rep;
}

VerifyReport suite_macdonald_routes(const VerifyOptions& opt) {
    return drive("macdonald-routes", opt, [&](Rng& rng, long, std::string& why) {
        int ell = opt.ell;
        // random alpha with |alpha| <= maxsize
        ExpVec alpha(ell, 0);
        int total = rint(rng, 0, opt.maxsize);
        for (int t = 0; t < total; ++t) ++alpha[rint(rng, 0, ell - 1)];
        LaurentPoly a = tE(alpha);
        if (tE_sanderson(alpha) != a) {
            why = "sanderson != recursion at alpha=" + vec_str(alpha);
            return false;
        }
        if (tE_catalan(alpha) != a) {
            why = "catalan != recursion at alpha=" + vec_str(alpha);
            return false;
        }
        // z-independence of the Sanderson route
        auto sp = sort_perms(alpha);
        HeckeElt z = sp.p.demazure(random_hecke(rng, ell));
        if (hecke_action(z, sp.alpha_plus) == alpha && tE_sanderson_z(alpha, z) != a) {
            why = "sanderson depends on z at alpha=" + vec_str(alpha);
            return false;
        }
        return true;
    });
}

VerifyReport suite_symmetrize(const VerifyOptions& opt) {
    return drive("symmetrize", opt, [&](Rng& rng, long, std::string& why) {
        int ell = opt.ell;
        ExpVec alpha(ell);
        for (int& a : alpha) a = rint(rng, 0, 2);
        auto res = symmetrize_check(alpha);
        if (res.ok) return true;
        why = "alpha=" + vec_str(alpha);
        return false;
    });
}

VerifyReport suite_stability(const VerifyOptions& opt) {
    return drive("stability", opt, [&](Rng& rng, long, std::string& why) {
        int ell = opt.ell;
        ExpVec beta(ell);
        for (int& a : beta) a = rint(rng, 0, 3);
        if (stability_check(beta, ell)) return true;
        why = "beta=" + vec_str(beta);
        return false;
    });
}

VerifyReport suite_truncation(const VerifyOptions& opt) {
    return drive("truncation-identities", opt, [&](Rng& rng, long t, std::string& why) {
        int ell = opt.ell;
        int mode = static_cast<int>(t % 7);
        if (mode == 0) {  // poly o pi_i = pi_i o poly
            LaurentPoly f = random_poly(rng, ell, 4, -2, 3);
            int i = rint(rng, 1, ell - 1);
            if (poly_trunc(pi(i, f)) == pi(i, poly_trunc(f))) return true;
            why = "poly/pi at i=" + std::to_string(i) + " f=" + f.to_string();
            return false;
        }
        if (mode == 1) {  // poly(x^a) = x^a, a >= 0; poly(x^g) = 0 for bad tail
            ExpVec a(ell);
            for (int& x : a) x = rint(rng, 0, 4);
            if (poly_trunc(LaurentPoly::monomial(a)) != LaurentPoly::monomial(a)) {
                why = "poly(x^a) != x^a at " + vec_str(a);
                return false;
            }
            ExpVec g(ell);
            for (int& x : g) x = rint(rng, -3, 3);
            long tail = 0;
            bool neg = false;
            for (int i = ell - 1; i >= 0; --i) {
                tail += g[i];
                if (tail < 0) { neg = true; break; }
            }
            if (neg && !poly_trunc(LaurentPoly::monomial(g)).is_zero()) {
                why = "poly(x^g) != 0 at " + vec_str(g);
                return false;
            }
            return true;
        }
        if (mode == 2) {  // trailing-zero insensitivity of H
            int m = rint(rng, 1, ell - 1);
            ExpVec gamma(ell, 0);
            for (int i = 0; i < m; ++i) gamma[i] = rint(rng, 0, 3);
            RootIdeal psi1 = random_root_ideal(rng, ell);
            RootIdeal psi2 = random_root_ideal(rng, ell);
            auto same_below = [&](const RootIdeal& x, const RootIdeal& y) {
                for (int i = 1; i <= m; ++i)
                    for (int j = i + 1; j <= m; ++j)
                        if (x.contains(i, j) != y.contains(i, j)) return false;
                return true;
            };
            if (!same_below(psi1, psi2)) return true;  // vacuous draw
            HeckeElt w = random_hecke(rng, ell);
            if (catalan_recursive(psi1, gamma, w) == catalan_recursive(psi2, gamma, w))
                return true;
            why = "H trailing-zero at gamma=" + vec_str(gamma);
            return false;
        }
        if (mode == 3) {  // pi_{i+1} Phi = Phi pi_i
            LaurentPoly f = random_poly(rng, ell, 4, -2, 3);
            int i = rint(rng, 1, ell - 2 >= 1 ? ell - 2 : 1);
            if (ell < 3) return true;
            if (pi(i + 1, phi(f)) == phi(pi(i, f))) return true;
            why = "Phi/pi at i=" + std::to_string(i);
            return false;
        }
        if (mode == 4) {  // poly(x1^a Phi f) = x1^a Phi poly(f), f in x_1..x_{ell-1}
            LaurentPoly f(ell);
            int terms = rint(rng, 1, 4);
            for (int k = 0; k < terms; ++k) {
                ExpVec e(ell, 0);
                for (int i = 0; i + 1 < ell; ++i) e[i] = rint(rng, -2, 3);
                int c = rint(rng, -3, 3);
                f += LaurentPoly::monomial(e, QPoly(c == 0 ? 1 : c));
            }
            int a = rint(rng, 0, 3);
            LaurentPoly lhs = poly_trunc(phi(f).mul_x_power(1, a));
            LaurentPoly rhs = phi(poly_trunc(f)).mul_x_power(1, a);
            if (lhs == rhs) return true;
            why = "poly/x1^a Phi at a=" + std::to_string(a) + " f=" + f.to_string();
            return false;
        }
        if (mode == 5) {  // x_ell poly(x_ell^{-1} pihat_{ell-1} f) = poly(pihat_{ell-1} f)
            LaurentPoly f = random_poly(rng, ell, 4, 0, 4);
            LaurentPoly g = pi_hat(ell - 1, f);
            if (poly_trunc(g.mul_x_power(ell, -1)).mul_x_power(ell, 1) == poly_trunc(g))
                return true;
            why = "x_ell/pihat identity at f=" + f.to_string();
            return false;
        }
        // mode 6: x_{i+1} pi_i f = pihat_i (x_i f) and pi_i(fg) = f pi_i(g) for s_i f = f
        LaurentPoly f = random_poly(rng, ell, 3, -2, 3);
        int i = rint(rng, 1, ell - 1);
        if (pi(i, f).mul_x_power(i + 1, 1) != pi_hat(i, f.mul_x_power(i, 1))) {
            why = "x_{i+1} pi_i = pihat_i x_i failed at i=" + std::to_string(i);
            return false;
        }
        LaurentPoly sym = f + s_act(i, f);
        LaurentPoly g = random_poly(rng, ell, 3, -2, 3);
        if (pi(i, sym * g) != sym * pi(i, g)) {
            why = "pi_i(fg) != f pi_i(g) for symmetric f at i=" + std::to_string(i);
            return false;
        }
        return true;
    });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "rotation",      "routes",           "katabolism-bijection",
        "charge-axioms", "key-oracle",       "kostka-triple",
        "macdonald-routes", "symmetrize",    "stability",
        "truncation-identities"};
    return names;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "rotation") return suite_rotation(opt);
    if (name == "routes") return suite_routes(opt);
    if (name == "katabolism-bijection") return suite_katabolism_bijection(opt);
    if (name == "charge-axioms") return suite_charge_axioms(opt);
    if (name == "key-oracle") return suite_key_oracle(opt);
    if (name == "kostka-triple") return suite_kostka_triple(opt);
    if (name == "macdonald-routes") return suite_macdonald_routes(opt);
    if (name == "symmetrize") return suite_symmetrize(opt);
    if (name == "stability") return suite_stability(opt);
    if (name == "truncation-identities") return suite_truncation(opt);
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace nscat
