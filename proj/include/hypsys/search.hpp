#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypsys/diagram.hpp"
#include "hypsys/matrix.hpp"
#include "hypsys/polynomial.hpp"
#include "hypsys/roots.hpp"

namespace hypsys {

/// One admissible path found by the search.
struct Emission {
  int k = 0;                 // start is π_n.t^k
  std::vector<Move> word;    // first letter is b
  IntPolynomial charpoly;    // det(X·I - V)
};

struct SearchConfig {
  int n = 4;
  /// Dilatation cutoff; completeness is only claimed for bound <= 2.
  mpq_class bound = 2;
  /// 0 selects 6(n-1).
  int max_depth = 0;
  int threads = 1;
  /// Seconds; 0 disables the budget.
  double time_budget = 0;
  /// Keep exploring past an arrival at s(start).
  bool continue_past_target = false;
  /// Called for every emitted path (serialized across threads).
  std::function<void(const Emission&)> on_emit;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t emitted = 0;
  std::uint64_t non_primitive = 0;
  std::uint64_t exact_fallbacks = 0;
  bool depth_limited = false;
  bool out_of_time = false;
  double seconds = 0;

  bool complete() const { return !depth_limited && !out_of_time; }
};

/// One distinct dilatation below the bound.
struct SpectrumEntry {
  RootEnclosure root;
  /// Characteristic polynomial of the representative, times (X+1).
  IntPolynomial polynomial;
  IntPolynomial charpoly;
  /// All distinct characteristic polynomials seen with this root, sorted.
  std::vector<IntPolynomial> class_charpolys;
  int k = 0;
  std::vector<Move> word;
  std::uint64_t path_count = 0;
};

struct SpectrumResult {
  int n = 0;
  std::vector<SpectrumEntry> entries;
  SearchStats stats;
  /// bound > 2: closed-loop dilatations are not enumerated.
  bool symmetric_only = false;
};

/// Raw enumeration; every emitted path goes to cfg.on_emit.
SearchStats enumerate_admissible(const SearchConfig& cfg);

/// Distinct dilatations below cfg.bound, ascending.
SpectrumResult spectrum(const SearchConfig& cfg);

struct SystoleResult {
  SpectrumEntry entry;
  SearchStats stats;
  /// Number of distinct characteristic polynomials attaining the minimum.
  std::size_t minimum_classes = 0;
};

/// Least dilatation by branch and bound, cross-checked against
/// systole_polynomial(n). Throws InternalInconsistency on a mismatch.
SystoleResult systole(int n, const SearchConfig& base = {});

/// Second least dilatation, run with a bound just above the predicted value.
/// Cross-checked against family_P_nk(n, K_n - 1).
SystoleResult second_length(int n, const SearchConfig& base = {});

struct CensusRow {
  int genus = 0;
  int n = 0;
  std::size_t count = 0;
  bool complete = true;
  double seconds = 0;
};

/// Distinct-length counts for n = 2g, g in [g_min, g_max]. `base.time_budget`
/// applies to each genus separately.
std::vector<CensusRow> census_table(int g_min, int g_max, const SearchConfig& base = {});

/// "H(2g-2)" for even n, "H(g-1,g-1)" for odd n.
std::string stratum_name(int n);
int genus_of(int n);

/// det(X·I - M) through a mod-p Hessenberg reduction, valid when every
/// eigenvalue has modulus <= spectral_bound. Falls back to Berkowitz when
/// the coefficient bound does not fit.
IntPolynomial charpoly_fast(const IntMatrix& m, double spectral_bound);

}  // namespace hypsys
