#pragma once

// Dense complex linear algebra over tensor-product spaces of n spin-j
// particles: state vectors, operators, Kronecker products and basis
// bookkeeping.
//
// Basis convention used throughout: within a site the magnetic quantum
// number m runs from +j down to -j (level 0 <-> m=+j, level d-1 <-> m=-j),
// and particle 0 is the slowest-varying index. For qubits |++...+> is flat
// index 0 and |--...-> is the last index.

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace bellkit {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Tolerance for construction-level checks (norms, operator flag claims).
inline constexpr double kConstructionTol = 1e-12;

/// Largest supported product-space dimension, 3^6.
inline constexpr long kMaxDim = 729;

/// d^n with overflow guard; throws std::invalid_argument past kMaxDim.
long pow_checked(int d, int n);

/// One local level per particle; level k corresponds to m = j - k.
struct BasisLabel {
  std::vector<int> levels;

  bool operator==(const BasisLabel&) const = default;
};

/// Normalized amplitude vector over the d^n product basis.
struct StateVector {
  int num_particles = 0;
  int local_dim = 0;
  Vector amplitudes;

  long dim() const { return amplitudes.size(); }
};

/// Square complex matrix with optional verified hermitian/unitary claims.
struct Operator {
  Matrix entries;
  bool hermitian = false;
  bool unitary = false;

  long dim() const { return entries.rows(); }
};

/// Builds an Operator, verifying any claimed flag within kConstructionTol.
Operator make_operator(Matrix entries, bool hermitian = false,
                       bool unitary = false);

/// Builds a StateVector from raw amplitudes, normalizing them.
StateVector normalized_state(int n, int d, Vector amplitudes);

/// Kronecker product; the left factor indexes the slower-varying block.
Operator kron(const Operator& a, const Operator& b);

/// I^(k) (x) op (x) I^(n-1-k): embeds a d-dimensional operator at one site.
Operator embed_site_operator(const Operator& op, int site, int n, int d);

/// Applies a d x d matrix to one site of a raw amplitude vector.
/// The result is not normalized (op need not be unitary).
Vector apply_site_operator(const Vector& amplitudes, const Matrix& op,
                           int site, int n, int d);

/// Applies the same d x d matrix to every site (op^(x n) acting on psi).
Vector apply_operator_each_site(const Vector& amplitudes, const Matrix& op,
                                int n, int d);

long label_to_index(const BasisLabel& label, int n, int d);
BasisLabel index_to_label(long index, int n, int d);

/// Parses ket symbols into a label: '+' -> m=+j, '-' -> m=-j, '0' -> m=0.
/// Only defined for d = 2 ('+','-') and d = 3 ('+','0','-').
BasisLabel label_from_symbols(const std::string& symbols, int d);

std::string label_to_symbols(const BasisLabel& label, int d);

struct TermState {
  StateVector state;
  /// Norm of the raw coefficient vector before normalization; callers can
  /// assert printed prefactors are already correct instead of relying on
  /// the silent fix.
  double pre_normalization_norm = 0.0;
};

/// Places coefficients at their flat indices (duplicate labels summed),
/// records the pre-normalization norm, then normalizes.
TermState state_from_terms(
    const std::vector<std::pair<BasisLabel, Complex>>& terms, int n, int d);

double inner_product_magnitude(const StateVector& a, const StateVector& b);

/// min over phases of || e^{i phi} a - b ||.
double distance_up_to_phase(const StateVector& a, const StateVector& b);

// State document format (CLI interface): a JSON text with fields n, d and
// two equal-length arrays re[], im[] of d^n entries in flat-index order.
std::string state_to_document(const StateVector& psi);
StateVector state_from_document(const std::string& text);
void write_state_file(const StateVector& psi, const std::string& path);
StateVector read_state_file(const std::string& path);

}  // namespace bellkit
