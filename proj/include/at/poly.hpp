#pragma once

#include <cstddef>

#include "at/eulerian.hpp"
#include "at/orientation.hpp"

namespace at {

inline constexpr std::size_t kCoeffMaxMonomials = 10'000'000;

// Signed coefficient of the monomial prod_v x_v^{d(v)} in the graph polynomial
// prod_{uv in E, u<v} (x_u - x_v). The entries of d must sum to |E|; a negative
// entry just means coefficient 0. Expansion caps every exponent at d(v) and
// prunes a vertex as soon as its last incident edge has been multiplied in, so
// the live monomial table stays near the product of (d(v)+1) over the active
// frontier.
long long coeff(const Graph& g, const OutDegrees& d,
                std::size_t max_monomials = kCoeffMaxMonomials);

// diff(D) computed through the graph polynomial: the raw coefficient of the
// out-degree monomial carries sign (-1)^{descent parity}, so this equals
// diff_enum(D).diff() exactly whenever both are computable.
long long diff_coeff(const Orientation& d, std::size_t max_monomials = kCoeffMaxMonomials);

} // namespace at
