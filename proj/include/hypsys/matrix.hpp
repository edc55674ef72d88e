#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "hypsys/permutation.hpp"
#include "hypsys/polynomial.hpp"

namespace hypsys {

/// Square integer matrix, row-major, 0-based storage. Label α corresponds to
/// row/column α-1.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int size() const { return n_; }
  mpz_class& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Adds column `src` into column `dst` (right multiplication by I + E_{src,dst}).
  void add_column(int src, int dst);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  IntMatrix power(unsigned e) const;
  bool is_nonnegative() const;
  /// Entrywise a <= b.
  bool entrywise_le(const IntMatrix& other) const;
  mpz_class determinant() const;

  /// One row per line, entries space-separated.
  std::string to_string() const;
  static IntMatrix parse(const std::string& text);

 private:
  int n_ = 0;
  std::vector<mpz_class> a_;
};

/// I + E_{winner,loser} for 1-based labels. Throws InvalidTransvection when
/// winner == loser or a label is out of range.
IntMatrix elementary_matrix(int winner, int loser, int n);

/// A start permutation and a word of moves, with the per-step winners and
/// losers and the end permutation.
struct RauzyPath {
  LabeledPermutation start;
  std::vector<Move> moves;
  LabeledPermutation end;
  std::vector<std::pair<int, int>> steps;  // (winner, loser)

  static RauzyPath build(const LabeledPermutation& start, const std::vector<Move>& moves);
  int size() const { return start.size(); }
};

enum class PathKind { Auto, Symmetric, Closed };

/// Ordered product of the elementary matrices of the steps.
IntMatrix transition_matrix(const RauzyPath& path);

/// Relabeling matrix: p_{αβ} = 1 iff β sits at the top position where α sits
/// in `target` (s(end) in the symmetric case, end in the closed case).
IntMatrix relabeling_matrix(const LabeledPermutation& target, const LabeledPermutation& start);

/// V = Ṽ·P. Auto prefers the symmetric case when both apply. Throws
/// NotACandidatePath when the requested case does not apply.
IntMatrix path_matrix(const RauzyPath& path, PathKind kind = PathKind::Auto);

/// Whether the end of the path matches s(start) (resp. start) up to relabeling.
bool is_symmetric_path(const RauzyPath& path);
bool is_closed_path(const RauzyPath& path);

/// Some power up to the Wielandt bound (n-1)^2+1 is entrywise positive.
bool is_primitive(const IntMatrix& m);

/// det(X·I - M), exact (division-free Berkowitz recurrence).
IntPolynomial charpoly_exact(const IntMatrix& m);

/// δ(M): minimum column sum.
mpz_class min_column_sum(const IntMatrix& m);

}  // namespace hypsys
