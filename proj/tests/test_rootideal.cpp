#include "nscat/rootideal.hpp"

#include <doctest.h>

#include <random>

using namespace nscat;

namespace {
using RootSet = std::set<std::pair<int, int>>;

// brute-force removability: delete and check the upper-ideal axioms directly
RootSet removable_brute(const RootIdeal& psi) {
    RootSet out;
    auto roots = psi.roots();
    for (auto r : roots) {
        auto rest = roots;
        rest.erase(r);
        bool ok = true;
        for (auto [i, j] : rest) {
            if (i > 1 && rest.count({i - 1, j}) == 0 && i - 1 < j) {
                // upper ideal: (i,j) in Psi forces (i-1, j)
                ok = false;
                break;
            }
            if (j < psi.ell() && rest.count({i, j + 1}) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(r);
    }
    return out;
}
}  // namespace

TEST_CASE("nr to roots") {
    CHECK(RootIdeal(3, {1, 1, 1}).roots() == RootSet{{1, 2}, {1, 3}, {2, 3}});
    CHECK(RootIdeal(3, {3, 2, 1}).roots().empty());
    // the ell = 7 ideal with nr = (2,2,3,3,2,1): rows 1:3-7, 2:4-7, 3:6-7,
    // and one root in column 7 for each of rows 4, 5, 6
    RootIdeal psi(7, {2, 2, 3, 3, 2, 1});
    RootSet expect;
    for (int j = 3; j <= 7; ++j) expect.insert({1, j});
    for (int j = 4; j <= 7; ++j) expect.insert({2, j});
    for (int j = 6; j <= 7; ++j) expect.insert({3, j});
    expect.insert({4, 7});
    expect.insert({5, 7});
    expect.insert({6, 7});
    CHECK(psi.roots() == expect);
}

TEST_CASE("nr round trip, exhaustive") {
    for (int ell = 1; ell <= 6; ++ell)
        for (const auto& psi : all_root_ideals(ell))
            CHECK(RootIdeal::from_roots(ell, psi.roots()) == psi);
}

TEST_CASE("catalan count") {
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int ell = 1; ell <= 7; ++ell)
        CHECK(static_cast<long>(all_root_ideals(ell).size()) == catalan[ell]);
}

TEST_CASE("removable roots") {
    CHECK(RootIdeal::full(2).removable_roots() ==
          std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(RootIdeal::empty_ideal(3).removable_roots().empty());
    for (int ell = 2; ell <= 5; ++ell)
        for (const auto& psi : all_root_ideals(ell)) {
            auto fast = psi.removable_roots();
            CHECK(RootSet(fast.begin(), fast.end()) == removable_brute(psi));
            for (auto r : fast) CHECK(psi.remove(r).size() == psi.size() - 1);
        }
}

TEST_CASE("rotate") {
    CHECK(RootIdeal::full(2).rotate() == RootIdeal::full(2));
    CHECK(RootIdeal::empty_ideal(3).rotate() ==
          RootIdeal::from_roots(3, {{1, 3}, {2, 3}}));
    // explicit construction check on the ell = 7 example
    RootIdeal psi(7, {2, 2, 3, 3, 2, 1});
    RootSet expect;
    for (auto [i, j] : psi.roots())
        if (i > 1) expect.insert({i - 1, j - 1});
    for (int i = 1; i < 7; ++i) expect.insert({i, 7});
    CHECK(psi.rotate().roots() == expect);
}

TEST_CASE("ns words") {
    auto ws = RootIdeal::full(3).ns_words();
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == HeckeElt::from_word(3, {2, 1}));
    CHECK(ws[1] == HeckeElt::from_word(3, {2, 1}));
    auto we = RootIdeal::empty_ideal(3).ns_words();
    CHECK(we[0] == HeckeElt(3));
    CHECK(we[1] == HeckeElt::generator(3, 2));
    auto wk = RootIdeal(5, {2, 2, 2, 2, 1}).ns_words();
    for (int i = 0; i < 4; ++i) CHECK(wk[i] == HeckeElt::from_word(5, {4, 3, 2}));
}

TEST_CASE("parabolic") {
    CHECK(RootIdeal::parabolic({6}) == RootIdeal::empty_ideal(6));
    CHECK(RootIdeal::parabolic({1, 1, 1}) == RootIdeal::full(3));
    // Delta(1,3,2): row 1 at 2..6, rows 2-4 at 5..6, rows 5-6 empty
    RootSet expect;
    for (int j = 2; j <= 6; ++j) expect.insert({1, j});
    for (int i = 2; i <= 4; ++i)
        for (int j = 5; j <= 6; ++j) expect.insert({i, j});
    CHECK(RootIdeal::parabolic({1, 3, 2}).roots() == expect);
}

TEST_CASE("delta_prime") {
    // eta = (3): Delta'((3)) is empty in Delta^+_3
    CHECK(RootIdeal::delta_prime({3}, 3) == RootIdeal::empty_ideal(3));
    CHECK(RootIdeal::delta_prime({1, 1}, 2) == RootIdeal::full(2));
    // eta = (6,3,1), ell = 10: nr = (6,6,6,6,5,4,3,3,2,1)
    CHECK(RootIdeal::delta_prime({6, 3, 1}, 10).nr() ==
          std::vector<int>{6, 6, 6, 6, 5, 4, 3, 3, 2, 1});
    // containment and trapezoid shape, random eta
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> eta;
        int rem = 1 + static_cast<int>(rng() % 8), cap = rem;
        while (rem > 0) {
            int part = 1 + static_cast<int>(rng() % std::min(rem, cap));
            eta.push_back(part);
            cap = part;
            rem -= part;
        }
        int m = 0;
        for (int b : eta) m += b;
        auto dp = RootIdeal::delta_prime(eta, m).roots();
        auto d = RootIdeal::parabolic(eta).roots();
        for (auto r : dp) CHECK(d.count(r));
    }
}

TEST_CASE("delta_k") {
    CHECK(RootIdeal::delta_k({2, 2, 2, 1, 1}, 3).nr() ==
          std::vector<int>{2, 2, 2, 2, 1});
    // k >= mu_1 + ell - 1 gives the empty ideal
    CHECK(RootIdeal::delta_k({2, 1, 0}, 4) == RootIdeal::empty_ideal(3));
    // constant mu = (k,...,k) gives the full ideal
    CHECK(RootIdeal::delta_k({3, 3, 3}, 3) == RootIdeal::full(3));
}

TEST_CASE("tameness") {
    for (const auto& psi : all_root_ideals(3)) CHECK(psi.is_tame(HeckeElt::longest(3)));
    CHECK(RootIdeal::full(3).is_tame(HeckeElt::generator(3, 2)));
    CHECK_FALSE(RootIdeal::full(3).is_tame(HeckeElt(3)));
}
