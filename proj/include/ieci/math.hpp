#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace ieci {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779;
inline constexpr double kInvSqrt2 = 0.7071067811865475244;

// Standard normal density.
inline double normal_pdf(double x) {
  return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

// Standard normal CDF via the complementary error function.
// Relative error of erfc is at machine level, well below 1e-12.
inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * kInvSqrt2);
}

// Nodes and weights for E[f(X)], X ~ N(0,1): E[f] = sum_i w_i f(x_i).
// Computed once by Golub-Welsch on the probabilists' Hermite recurrence.
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;  // normalized, sum to 1
};

const GaussHermite& gauss_hermite_32();

}  // namespace ieci
