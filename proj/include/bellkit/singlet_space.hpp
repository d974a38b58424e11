#pragma once

// Total-spin-zero subspaces: enumeration by exact integer coupling counts
// and by numerical nullspace, the named states studied in the analysis,
// tensor powers of the two-partite singlet, and direction-dependent term
// counts.

#include "bellkit/spin_ops.hpp"
#include "bellkit/tensor_core.hpp"

#include <string>
#include <vector>

namespace bellkit {

enum class Axis { X, Y, Z };

/// Sum over sites of the embedded single-site spin component.
Operator total_spin_component(int n, Spin s, Axis axis);

/// Orthonormal basis of the simultaneous kernel of the three total-spin
/// components.
struct SingletBasis {
  int num_particles = 0;
  Spin spin;
  double tol = 0.0;
  Matrix columns;  // D x dimension, orthonormal

  int dimension() const { return static_cast<int>(columns.cols()); }
};

/// Nullspace of the stacked [Jx_tot; Jy_tot; Jz_tot] matrix via SVD;
/// singular values below tol * (largest singular value) count as zero.
/// Columns are canonicalized (anchored to the lexicographically first
/// product kets, phases fixed as in spin_ops) so bases are reproducible.
SingletBasis singlet_basis(int n, Spin s, double tol = 1e-9);

/// Multiplicity of total spin zero in the n-fold coupling, by the exact
/// integer dynamic program over spin-multiplicity tables. No floating
/// point; this is the ground truth the numerical basis must agree with.
long long singlet_multiplicity(int n, Spin s);

/// The two-partite spin-j singlet: sum_m (-1)^(j-m) |m,-m> / sqrt(d).
StateVector pair_singlet(Spin s);

/// n_pairs-fold tensor power of the two-partite singlet, normalized.
StateVector power_singlet(Spin s, int n_pairs);

/// Known state identifiers:
///   bell_2_2, psi_2_4_s1, psi_2_4_s2, psi_2_2n_s1(k), psi_3_2, psi_3_3,
///   psi_3_4_s1, psi_3_4_s2, psi_3_2n_s3(k), ghz_mermin_4, product_plus_4,
///   power_singlet(j,k)   with j a spin string such as 1/2 or 1.
StateVector named_state(const std::string& id);

/// Same, also exposing the pre-normalization norm of the coefficient list
/// so printed prefactors can be asserted.
TermState named_state_with_norm(const std::string& id);

std::vector<std::string> named_state_ids();

/// || R^(x n) psi - psi ||; spin-zero states are strictly invariant, not
/// just invariant up to phase.
double rotation_invariance_residual(const StateVector& psi,
                                    const Direction& axis, double angle);

/// Number of amplitudes above tol after re-expressing psi in the product
/// eigenbasis of spin_along(dir) on every site.
int term_count(const StateVector& psi, const Direction& dir,
               double tol = 1e-8);

}  // namespace bellkit
