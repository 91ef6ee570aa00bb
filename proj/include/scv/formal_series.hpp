#pragma once

// Exact formal power series over Q, truncated at a fixed order.

#include <cstdint>
#include <vector>

#include "scv/arith.hpp"

namespace scv {

// Coefficients of t^0 .. t^order.
using ExactSeries = std::vector<Rational>;

// F_{alpha,b}(t) = sum (alpha k + 1) a_k t^k.
ExactSeries series_F(const Rational& alpha, const std::vector<Rational>& b, int order);

ExactSeries series_multiply(const ExactSeries& x, const ExactSeries& y, int order);
// f(g(t)); requires g(0) = 0.
ExactSeries series_compose(const ExactSeries& f, const ExactSeries& g, int order);
// t * f'(t).
ExactSeries series_theta(const ExactSeries& f);

bool is_zero(const ExactSeries& f);

// (1 - 2t) F_{a1,(1/2,c,1-c)}(4t(1-t))
//   - [(1 - 2t) F0(t)^2 + 2 a1 (1 - t) F0(t) * t F0'(t)],  F0 = F_{0,(c,1-c)}.
ExactSeries quadratic_transformation_defect(const Rational& c, const Rational& a1, int order);

// F_{0,(1/2,c,1-c)}(4t(1-t)) - F_{0,(c,1-c)}(t)^2.
ExactSeries geometric_clausen_defect(const Rational& c, int order);

// [F_{0,b}]_{p-1} [F_{alpha,b}]_{p-1} - [F_{0,b} F_{alpha,b}]_{p-1} - tail, where
// tail = sum_{k=1}^{p-1} sum_{j=0}^{p-1-k} a_{k+j} b_{p-1-j} z^{p-1+k}; a polynomial in z.
ExactSeries truncation_tail_defect(const std::vector<Rational>& b, const Rational& alpha, std::uint64_t p);

}  // namespace scv
