#pragma once

// Random-restart derivative-free descent over normalized states (optionally
// restricted to a singlet subspace) minimizing the nonuniqueness score.
// Results are empirical evidence only; no global-optimality claim is made.

#include "bellkit/singlet_space.hpp"
#include "bellkit/spin_ops.hpp"
#include "bellkit/tensor_core.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace bellkit {

struct SearchConfig {
  int num_particles = 2;
  Spin spin{1};
  std::vector<Direction> directions;
  /// Restrict the search to the total-spin-zero subspace.
  bool restrict_to_singlets = false;
  int restarts = 10;
  /// Objective evaluations per restart.
  int max_iterations = 60000;
  double initial_step = 0.5;
  double step_grow = 1.6;
  double step_shrink = 0.55;
  double min_step = 1e-9;
  /// Convergence tolerance: a restart stops once improvements stall below
  /// this level.
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
  bool record_traces = false;
};

struct SearchResult {
  double best_score = 0.0;
  StateVector best_state;
  int best_restart = -1;
  std::vector<double> restart_final_scores;
  std::vector<int> restart_iterations;
  std::vector<Direction> directions;
  /// Best-so-far score at every accepted improvement, one trace per
  /// restart; filled only when SearchConfig::record_traces is set.
  std::vector<std::vector<double>> traces;
};

/// Interprets consecutive (real, imag) pairs as D complex coefficients of
/// the product basis and normalizes. Scale-invariant: scaling params leaves
/// the state unchanged.
StateVector parametrize(std::span<const double> params, int n, Spin s);

/// Same, but coefficients weight the columns of a singlet basis, so the
/// output is a singlet within the basis residual.
StateVector parametrize(std::span<const double> params,
                        const SingletBasis& basis);

/// Multi-restart local descent on nonuniqueness_score over parametrize.
/// Deterministic given the seed; per-restart best-so-far is nonincreasing.
SearchResult minimize_score(const SearchConfig& config);

}  // namespace bellkit
