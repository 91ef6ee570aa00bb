#include "scv/families.hpp"

#include "scv/errors.hpp"

namespace scv {

Family family_from_degree(int d) {
  switch (d) {
    case 2: return Family::D2;
    case 3: return Family::D3;
    case 4: return Family::D4;
    case 6: return Family::D6;
    default: throw InvalidD("d must be one of 2, 3, 4, 6");
  }
}

int twist_constant(Family f) {
  switch (f) {
    case Family::D2: return -1;
    case Family::D3: return -3;
    case Family::D4: return -2;
    case Family::D6: return -1;
  }
  throw InvalidD("unknown family");
}

std::vector<Rational> two_parameter_b(Family f) {
  const int d = degree(f);
  return {Rational(1, d), Rational(d - 1, d)};
}

std::vector<Rational> three_parameter_b(Family f) {
  const int d = degree(f);
  return {Rational(1, 2), Rational(1, d), Rational(d - 1, d)};
}

}  // namespace scv
