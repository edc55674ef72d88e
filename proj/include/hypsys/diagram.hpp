#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hypsys/permutation.hpp"

namespace hypsys {

/// Run lengths of the shortest word from π_n, padded so that they sum to n-1.
struct PathCoordinates {
  std::vector<int> parts;
  /// Letter of the first run; RightT for the central permutation.
  Move first = Move::RightT;

  friend bool operator==(const PathCoordinates&, const PathCoordinates&) = default;
};

/// The hyperelliptic Rauzy diagram D_n: BFS closure of π_n under right moves.
/// Vertex 0 is π_n. Labeled and reduced vertices coincide in D_n, so lookups
/// go through the reduced permutation.
class RauzyDiagram {
 public:
  struct Edge {
    std::uint32_t target;
    std::uint8_t winner;
    std::uint8_t loser;
  };

  /// 2 <= n <= 24. Throws InternalInconsistency if two labeled vertices share
  /// a reduced permutation.
  static RauzyDiagram build(int n);

  int n() const { return n_; }
  std::size_t size() const { return parent_.size(); }
  std::size_t edge_count() const { return 2 * size(); }

  LabeledPermutation vertex(std::uint32_t v) const;
  /// Edge for RightT (index 0) or RightB (index 1).
  const Edge& edge(std::uint32_t v, Move m) const { return edges_[v][m == Move::RightT ? 0 : 1]; }

  /// Index of the vertex equal to p up to relabeling.
  std::optional<std::uint32_t> find(const LabeledPermutation& p) const;
  /// Like find, but throws NotInDiagram.
  std::uint32_t index_of(const LabeledPermutation& p) const;

  /// Index of s(v).
  std::uint32_t symmetric_of(std::uint32_t v) const { return sym_[v]; }

  /// Shortest word from π_n (unique).
  std::vector<Move> shortest_word(std::uint32_t v) const;
  int distance(std::uint32_t v) const { return depth_[v]; }

  PathCoordinates coordinates(std::uint32_t v) const;
  PathCoordinates coordinates(const LabeledPermutation& p) const { return coordinates(index_of(p)); }
  /// Inverse of coordinates. Throws NotInDiagram for parts that do not encode
  /// a shortest word.
  std::uint32_t from_coordinates(const PathCoordinates& c) const;

  /// True when every vertex reaches every other vertex.
  bool strongly_connected() const;

 private:
  using Key = std::array<std::uint64_t, 2>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return k[0] * 0x9e3779b97f4a7c15ULL ^ k[1]; }
  };
  static Key key_of(const std::vector<int>& reduced);

  int n_ = 0;
  std::vector<std::uint8_t> tops_;     // n bytes per vertex
  std::vector<std::uint8_t> bottoms_;  // n bytes per vertex
  std::vector<std::array<Edge, 2>> edges_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> parent_move_;
  std::vector<int> depth_;
  std::vector<std::uint32_t> sym_;
  std::unordered_map<Key, std::uint32_t, KeyHash> index_;
};

/// Coordinates of the central permutation: (n-1).
PathCoordinates central_coordinates(int n);

/// Path from a vertex coordinates encoding: apply t^{p1} b^{p2} ... (or b
/// first) from π_n.
LabeledPermutation permutation_from_coordinates(int n, const PathCoordinates& c);

}  // namespace hypsys
