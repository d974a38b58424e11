#pragma once

// Spin-j operator algebra: component matrices in the m-descending basis,
// observables along arbitrary directions and rotation operators.

#include "bellkit/tensor_core.hpp"

#include <string>

namespace bellkit {

/// Spin magnitude stored as 2j so half-integer spins stay exact.
struct Spin {
  int two_j = 1;

  int dim() const { return two_j + 1; }
  double j() const { return 0.5 * two_j; }

  /// Parses "1/2", "1", "3/2", ... into a Spin.
  static Spin from_string(const std::string& text);
  std::string to_string() const;

  bool operator==(const Spin&) const = default;
};

/// Unit 3-vector. Construction rejects non-unit input; use
/// normalized_direction to build one from an arbitrary nonzero vector.
struct Direction {
  double x = 0.0, y = 0.0, z = 1.0;
};

Direction make_direction(double x, double y, double z);
Direction normalized_direction(double x, double y, double z);
double dot(const Direction& a, const Direction& b);

/// Rotates v about axis by angle (right-hand rule, Rodrigues formula).
Direction rotate_direction(const Direction& v, const Direction& axis,
                           double angle);

inline Direction x_axis() { return Direction{1.0, 0.0, 0.0}; }
inline Direction y_axis() { return Direction{0.0, 1.0, 0.0}; }
inline Direction z_axis() { return Direction{0.0, 0.0, 1.0}; }

struct SpinComponents {
  Operator jx, jy, jz;
};

/// (Jx, Jy, Jz) in the m-descending basis: Jz = diag(j, j-1, ..., -j),
/// Jx and Jy from the standard ladder construction. All hermitian.
SpinComponents spin_matrices(Spin s);

/// Eigenpairs ordered by eigenvalue descending (m = j down to -j). Each
/// eigenvector's largest-magnitude component is made real positive, ties
/// broken by lowest index, so eigensystems are deterministic.
struct Eigensystem {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;  // column k pairs with eigenvalues[k]

  int two_m_of_level(int level) const;
};

struct DirectedSpin {
  Operator op;
  Eigensystem eigensystem;
};

/// x Jx + y Jy + z Jz together with its sorted eigensystem.
DirectedSpin spin_along(Spin s, const Direction& dir);

/// exp(-i angle (axis . J)), computed by eigendecomposition of the
/// hermitian generator; exact at these dimensions.
Operator rotation_operator(Spin s, const Direction& axis, double angle);

}  // namespace bellkit
