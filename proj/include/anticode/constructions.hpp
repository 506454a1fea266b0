#pragma once

// Builders for the code families used throughout the library.

#include <cstddef>
#include <span>
#include <vector>

#include "anticode/codes.hpp"

namespace anticode {

// Generalized Reed-Solomon code: rows v_j * alpha_j^i for i = 0..k-1.
// Requires distinct alphas, nonzero vs of the same length n, 1 <= k <= n <= q.
LinearCode grs(const Field& field, std::span<const Elem> alphas, std::span<const Elem> vs, std::size_t k);

// GRS generator with an extra column (0, ..., 0, 1)^T: an [n+1, k, n-k+2] code.
LinearCode extended_grs(const Field& field, std::span<const Elem> alphas, std::span<const Elem> vs, std::size_t k);

// Defaults: v = all ones, alphas = first n elements in encoding order.
LinearCode grs(const Field& field, std::size_t n, std::size_t k);
LinearCode extended_grs(const Field& field, std::size_t n, std::size_t k);

// q-ary simplex code of dimension k >= 2: one column per 1-dimensional
// subspace of GF(q)^k, represented by the vector whose first nonzero entry
// is 1, listed in lexicographic order.
LinearCode simplex(const Field& field, std::size_t k);

// Projective representatives of GF(q)^k in the order simplex() uses them.
std::vector<std::vector<Elem>> projective_points(const Field& field, std::size_t k);

// [2m, m] code generated by (I_m | I_m).
LinearCode identity_pair(std::size_t m, const Field& field);

}  // namespace anticode
