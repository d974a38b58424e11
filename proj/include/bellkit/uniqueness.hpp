#pragma once

// The uniqueness property: does one particle's outcome determine the
// outcomes of all other particles measured along the same direction?
// Provides the yes/no predicate, the post-measurement conditioning it is
// built from, and a continuous nonuniqueness score usable as an
// optimization objective (zero exactly on uniqueness).

#include "bellkit/spin_ops.hpp"
#include "bellkit/tensor_core.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bellkit {

/// Thrown when conditioning on an outcome whose probability is numerically
/// zero; distinct from invalid input.
class zero_probability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcomes with probability at or below this floor are ignored by the
/// uniqueness predicate and the score.
inline constexpr double kProbabilityFloor = 1e-9;

/// Joint outcome statistics for per-particle measurement directions.
/// Outcome tuples are keyed by the same flat index scheme as BasisLabel
/// (level 0 <-> m=+j in each site's eigenbasis).
struct OutcomeDistribution {
  int num_particles = 0;
  int local_dim = 0;
  std::vector<Direction> directions;
  std::vector<double> probabilities;

  double probability(const BasisLabel& outcome) const;
};

/// |<m_1,...,m_n|psi>|^2 in the per-site eigenbases of spin_along(dirs[k]).
OutcomeDistribution joint_distribution(const StateVector& psi,
                                       const std::vector<Direction>& dirs);

struct MeasurementUpdate {
  double probability = 0.0;
  StateVector post_state;
};

/// Projects particle `particle` onto the eigenvector with magnetic number
/// two_m/2 along dir, returning the outcome probability and the normalized
/// post-measurement state. Throws zero_probability_error below 1e-12.
MeasurementUpdate conditional_after_measurement(const StateVector& psi,
                                                int particle,
                                                const Direction& dir,
                                                int two_m);

/// Worst offender found by the predicate: conditioning particle `particle`
/// on outcome two_m/2 leaves the rest with best joint probability
/// `best_conditional` (1 means a point mass).
struct UniquenessWitness {
  int particle = -1;
  int two_m = 0;
  double best_conditional = 1.0;
};

struct UniquenessVerdict {
  bool unique = true;
  /// sum over particles k and outcomes m of p_k(m) (1 - best conditional).
  double score = 0.0;
  UniquenessWitness witness;
  std::vector<double> per_particle_scores;
};

/// TRUE iff for every particle and every outcome with probability > tol the
/// conditional distribution of the remaining outcomes (same direction on
/// all particles) is a point mass up to tol.
UniquenessVerdict is_unique(const StateVector& psi, const Direction& dir,
                            double tol = kProbabilityFloor);

struct DirectionVerdict {
  Direction dir;
  UniquenessVerdict verdict;
};

struct UniquenessReport {
  std::string state_id;
  std::vector<DirectionVerdict> per_direction;
  double total_score = 0.0;
};

UniquenessReport uniqueness_report(const std::string& state_id,
                                   const StateVector& psi,
                                   const std::vector<Direction>& dirs,
                                   double tol = kProbabilityFloor);

/// Sum of per-direction scores; continuous in psi and zero exactly when
/// is_unique holds for every direction in the set.
double nonuniqueness_score(const StateVector& psi,
                           const std::vector<Direction>& dirs);

}  // namespace bellkit
