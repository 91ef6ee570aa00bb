#pragma once

// The four hypergeometric families indexed by d in {2, 3, 4, 6}.

#include <vector>

#include "scv/arith.hpp"

namespace scv {

enum class Family { D2 = 2, D3 = 3, D4 = 4, D6 = 6 };

// InvalidD unless d is 2, 3, 4 or 6.
Family family_from_degree(int d);

inline int degree(Family f) { return static_cast<int>(f); }

// k_2 = k_6 = -1, k_3 = -3, k_4 = -2.
int twist_constant(Family f);

// (1/d, (d-1)/d)
std::vector<Rational> two_parameter_b(Family f);
// (1/2, 1/d, (d-1)/d)
std::vector<Rational> three_parameter_b(Family f);

inline const Family all_families[] = {Family::D2, Family::D3, Family::D4, Family::D6};

}  // namespace scv
