#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypsys/diagram.hpp"
#include "hypsys/roots.hpp"

namespace hypsys {

/// A path of right moves in D_n from `start` to s(start).
struct AdmissiblePath {
  LabeledPermutation start;
  std::vector<Move> word;
};

/// True when the path ends at s(start), never visits π_n and has a primitive
/// matrix.
bool is_pure_admissible(const RauzyDiagram& d, const AdmissiblePath& path);

/// Start on the central loop (two coordinate parts) and first move b.
bool is_normalized(const RauzyDiagram& d, const AdmissiblePath& path);

/// Swaps the rows of the start and the letters of the word.
AdmissiblePath row_swap(const AdmissiblePath& path);

struct ZrlOptions {
  int max_iterations = 10000;
  /// Cap on the number of dynamic steps inside one ZRL step.
  int max_steps = 100000;
};

struct ZrlStep {
  AdmissiblePath path;            // the new path
  std::vector<Move> right_word;   // b^l t
  std::vector<Move> left_word;    // T^m B
  bool input_swapped = false;     // rows swapped to meet the first-move-t convention on input
  bool output_swapped = false;    // rows swapped after the left induction
  PathCoordinates before;
  PathCoordinates after;
  RootEnclosure theta;
  /// Letters that won (resp. lost) during the right and left induction.
  std::vector<int> winners;
  std::vector<int> losers;
};

/// One ZRL step on eigen-data: right induction until the bottom-last letter
/// loses, then left induction until the top-first letter loses; the new path
/// is read off by right induction from the new data until it returns to the
/// symmetric permutation with lengths scaled by θ^{-1}.
/// Throws NotPure, NotACandidatePath or NotPrimitive on bad input, Budget
/// when max_steps is exceeded.
ZrlStep zrl_step(const RauzyDiagram& d, const AdmissiblePath& path, const ZrlOptions& opts = {});

struct ZrlResult {
  AdmissiblePath path;
  std::vector<ZrlStep> trace;
  int iterations = 0;
};

/// Iterates zrl_step until is_normalized. Throws Budget after max_iterations.
ZrlResult zrl_normalize(const RauzyDiagram& d, const AdmissiblePath& path, const ZrlOptions& opts = {});

/// Coordinate parts reachable by one ZRL step according to the coding rules
/// (right-end and left-end replacements, zero parts merged away). Empty for
/// fewer than four parts.
std::set<std::vector<int>> zrl_coding_successors(const std::vector<int>& parts);

/// One line per step: index, right word, left word, new coordinates, θ.
std::string format_trace(const ZrlResult& r);

/// Random pure admissible path: a random start with an even number of
/// coordinate parts and first move t, then a random walk avoiding π_n that
/// stops at the first arrival at s(start). With `below_two` only paths with
/// θ < 2 are kept: avoiding π_n alone does not rule out a classical map.
/// Gives up after `attempts` tries.
AdmissiblePath sample_pure_admissible(const RauzyDiagram& d, std::mt19937_64& rng, int max_length = 40,
                                      int attempts = 100000, bool below_two = true);

}  // namespace hypsys
