#pragma once

#include "nscat/laurent.hpp"
#include "nscat/tabloid.hpp"

#include <vector>

namespace nscat {

// Partitions of n with at most max_parts parts, each at most max_part.
std::vector<std::vector<int>> partitions(int n, int max_parts, int max_part);

// Semistandard tableaux of shape lambda with entries in [ell].
std::vector<Tabloid> ssyt_of_shape(const std::vector<int>& lambda, int ell);

// Semistandard tableaux with content mu and at most ell rows (any shape).
std::vector<Tabloid> ssyt_of_content(const std::vector<int>& mu, int ell);

// All tabloids with ell rows and content mu.
std::vector<Tabloid> tabloids_of_content(const std::vector<int>& mu, int ell);

// Schur polynomial s_lambda(x_1..x_ell) from its tableau generating function.
LaurentPoly schur_poly(const std::vector<int>& lambda, int ell);

}  // namespace nscat
