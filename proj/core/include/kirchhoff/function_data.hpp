#pragma once

#include <cmath>

namespace kirchhoff {

/// Scalar integrals of a function u that fully determine J_a(t u).
struct FunctionData {
  double h1b_sq = 0.0;  ///< b int |grad u|^2 + int u^2
  double dir_sq = 0.0;  ///< int |grad u|^2
  double mass = 0.0;    ///< int u^2
  double fp = 0.0;      ///< int f |u|^p

  static FunctionData from(double dir_sq, double mass, double fp, double b) {
    return {b * dir_sq + mass, dir_sq, mass, fp};
  }

  /// Unweighted H^1 norm squared.
  double h1_sq() const { return dir_sq + mass; }

  bool consistent(double b, double rel = 1e-12) const {
    return std::abs(h1b_sq - (b * dir_sq + mass)) <= rel * std::abs(h1b_sq);
  }
};

}  // namespace kirchhoff
