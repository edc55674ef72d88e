#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "hypsys/matrix.hpp"
#include "hypsys/permutation.hpp"
#include "hypsys/polynomial.hpp"
#include "hypsys/roots.hpp"

namespace hypsys {

/// Precision ceiling in bits for sign decisions: HYPSYS_PRECISION if set,
/// else 1024.
int default_precision_bits();

/// Exact arithmetic in Z[θ] for a certified real algebraic θ. Elements are
/// integer polynomials reduced modulo the (monic) defining polynomial of θ.
class ThetaField {
 public:
  explicit ThetaField(RootEnclosure theta, int precision_bits = default_precision_bits());

  const RootEnclosure& theta() const { return theta_; }
  const IntPolynomial& modulus() const { return q_; }

  IntPolynomial reduce(const IntPolynomial& a) const;
  /// θ·a, reduced.
  IntPolynomial times_theta(const IntPolynomial& a) const;
  /// Exact sign of a(θ). Zero is detected exactly. Throws AmbiguousComparison
  /// if a nonzero value cannot be separated from 0 within the precision ceiling.
  int sign(const IntPolynomial& a) const;
  double approx(const IntPolynomial& a) const;

 private:
  mutable RootEnclosure theta_;
  IntPolynomial q_;
  int precision_bits_;
};

/// Feasible heights of a weak suspension datum: the open interval
/// (-min top partial sum, -max bottom partial sum), subject to the corner
/// clauses.
struct HeightInterval {
  bool nonempty = false;
  double lo = 0;  // approximate endpoints, for display
  double hi = 0;
  bool clause_iii_applies = false;
  bool clause_iii_holds = true;
  bool clause_iv_applies = false;
  bool clause_iv_holds = true;
};

/// Rational τ indexed by label-1.
HeightInterval height_interval(const LabeledPermutation& pi, const std::vector<mpq_class>& tau);
/// τ in Z[θ].
HeightInterval height_interval(const LabeledPermutation& pi, const std::vector<IntPolynomial>& tau,
                               const ThetaField& field);

/// Clause check at a given rational height (clauses i to iv).
bool is_weak_suspension(const LabeledPermutation& pi, const std::vector<mpq_class>& tau, const mpq_class& h);

struct EigenData {
  RootEnclosure theta;
  /// Perron eigenvector and θ^{-1}-eigenvector, exact in Z[θ], indexed by label-1.
  std::vector<IntPolynomial> lambda;
  std::vector<IntPolynomial> tau;
  /// λ / Σλ and τ / Σ|τ|, approximated.
  std::vector<double> lambda_approx;
  std::vector<double> tau_approx;
  /// τ was negated to make the height interval nonempty.
  bool tau_flipped = false;
  HeightInterval heights;
};

/// Eigen-data of a primitive matrix V relative to the start permutation `pi`.
/// Throws NotPrimitive for non-primitive V, ConstructionViolation when
/// neither sign of τ is a weak suspension datum.
EigenData eigen_data(const IntMatrix& v, const LabeledPermutation& pi);

/// Interval exchange data with lengths in Z[θ].
struct IetState {
  LabeledPermutation pi;
  std::vector<IntPolynomial> lengths;  // indexed by label-1
};

/// Interval exchange data with rational lengths.
struct RationalIetState {
  LabeledPermutation pi;
  std::vector<mpq_class> lengths;
};

enum class Side { Right, Left };

template <typename State>
struct DynamicStep {
  State state;
  Move move;
  int winner;
  int loser;
};

/// One Rauzy-Veech step decided by the lengths. Left steps are s∘Right∘s.
/// Throws AmbiguousComparison on a tie.
DynamicStep<IetState> rauzy_step_dynamic(const IetState& s, Side side, const ThetaField& field);
DynamicStep<RationalIetState> rauzy_step_dynamic(const RationalIetState& s, Side side);

}  // namespace hypsys
