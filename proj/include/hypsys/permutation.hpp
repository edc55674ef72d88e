#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hypsys {

/// Two-row labeled permutation on the alphabet {1..n}.
///
/// `top[i]` is the label of the (i+1)-th interval before the exchange and
/// `bottom[i]` the label of the (i+1)-th interval after it. Labels are plain
/// ints; any relabeling is an explicit map between two such objects.
struct LabeledPermutation {
  std::vector<int> top;
  std::vector<int> bottom;

  int size() const { return static_cast<int>(top.size()); }

  /// Position permutation: entry i is the bottom position (0-based) of the
  /// label sitting at top position i. Two labeled permutations are equal up
  /// to relabeling iff their reduced forms agree.
  std::vector<int> reduced() const;

  bool same_up_to_relabeling(const LabeledPermutation& other) const {
    return reduced() == other.reduced();
  }

  /// Throws InvalidSize when the rows are not permutations of {1..n}.
  void validate() const;

  /// "1 2 3 4 / 4 3 2 1"
  std::string to_string() const;
  static LabeledPermutation parse(std::string_view text);

  friend bool operator==(const LabeledPermutation&, const LabeledPermutation&) = default;
};

/// Rauzy moves. Right moves cut the interval on the right, left moves on the
/// left. The letter names the row whose extreme label wins: RightT means
/// top-last wins, LeftT means top-first wins.
enum class Move : unsigned char { RightT, RightB, LeftT, LeftB };

char move_letter(Move m);  // t, b, T, B
bool is_right(Move m);

struct MoveResult {
  LabeledPermutation result;
  int winner;
  int loser;
};

LabeledPermutation central_permutation(int n);

/// Applies one combinatorial Rauzy move. Throws UndefinedMove when the two
/// competing labels coincide.
MoveResult rauzy_move(const LabeledPermutation& p, Move m);

/// s(p): rows reversed and exchanged.
LabeledPermutation symmetric(const LabeledPermutation& p);

/// Exchanges top and bottom rows (same labels).
LabeledPermutation row_swap(const LabeledPermutation& p);

/// Parses "bbt", "b^3 t^2", "TtB". Lowercase letters are right moves,
/// uppercase letters left moves.
std::vector<Move> parse_word(std::string_view text);

/// Plain letters, or run-length form "b^3 t^2" when `run_length` is set.
std::string format_word(const std::vector<Move>& word, bool run_length = false);

}  // namespace hypsys
