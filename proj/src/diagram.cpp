#include "hypsys/diagram.hpp"

#include <deque>
#include <numeric>

#include "hypsys/errors.hpp"

namespace hypsys {

RauzyDiagram::Key RauzyDiagram::key_of(const std::vector<int>& reduced) {
  Key k{0, 0};
  for (std::size_t i = 0; i < reduced.size(); ++i)
    k[i / 12] |= static_cast<std::uint64_t>(reduced[i]) << (5 * (i % 12));
  return k;
}

RauzyDiagram RauzyDiagram::build(int n) {
  if (n < 2 || n > 24) throw Error(ErrorKind::InvalidSize, "diagram size must satisfy 2 <= n <= 24");
  RauzyDiagram d;
  d.n_ = n;
  const std::size_t expected = (std::size_t{1} << (n - 1)) - 1;
  d.tops_.reserve(expected * n);
  d.bottoms_.reserve(expected * n);
  d.edges_.reserve(expected);
  d.parent_.reserve(expected);
  d.index_.reserve(expected);

  auto add_vertex = [&](const LabeledPermutation& p, std::uint32_t parent, Move via, int depth) {
    const auto id = static_cast<std::uint32_t>(d.parent_.size());
    for (int i = 0; i < n; ++i) {
      d.tops_.push_back(static_cast<std::uint8_t>(p.top[i]));
      d.bottoms_.push_back(static_cast<std::uint8_t>(p.bottom[i]));
    }
    d.edges_.push_back({});
    d.parent_.push_back(parent);
    d.parent_move_.push_back(static_cast<std::uint8_t>(via));
    d.depth_.push_back(depth);
    d.index_.emplace(key_of(p.reduced()), id);
    return id;
  };

  add_vertex(central_permutation(n), 0, Move::RightT, 0);
  for (std::uint32_t v = 0; v < d.parent_.size(); ++v) {
    const LabeledPermutation p = d.vertex(v);
    for (Move m : {Move::RightT, Move::RightB}) {
      MoveResult r = rauzy_move(p, m);
      auto it = d.index_.find(key_of(r.result.reduced()));
      std::uint32_t target;
      if (it == d.index_.end()) {
        target = add_vertex(r.result, v, m, d.depth_[v] + 1);
      } else {
        target = it->second;
        if (!(d.vertex(target) == r.result))
          throw Error(ErrorKind::InternalInconsistency,
                      "labeled and reduced diagrams differ at " + r.result.to_string());
      }
      d.edges_[v][m == Move::RightT ? 0 : 1] =
          Edge{target, static_cast<std::uint8_t>(r.winner), static_cast<std::uint8_t>(r.loser)};
    }
  }

  d.sym_.resize(d.size());
  for (std::uint32_t v = 0; v < d.size(); ++v) d.sym_[v] = d.index_of(symmetric(d.vertex(v)));
  return d;
}

LabeledPermutation RauzyDiagram::vertex(std::uint32_t v) const {
  LabeledPermutation p;
  const std::size_t off = static_cast<std::size_t>(v) * n_;
  p.top.assign(tops_.begin() + off, tops_.begin() + off + n_);
  p.bottom.assign(bottoms_.begin() + off, bottoms_.begin() + off + n_);
  return p;
}

std::optional<std::uint32_t> RauzyDiagram::find(const LabeledPermutation& p) const {
  if (p.size() != n_) return std::nullopt;
  auto it = index_.find(key_of(p.reduced()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t RauzyDiagram::index_of(const LabeledPermutation& p) const {
  auto v = find(p);
  if (!v) throw Error(ErrorKind::NotInDiagram, p.to_string() + " is not a vertex of D_" + std::to_string(n_));
  return *v;
}

std::vector<Move> RauzyDiagram::shortest_word(std::uint32_t v) const {
  std::vector<Move> w(depth_[v]);
  for (int i = depth_[v] - 1; i >= 0; --i) {
    w[i] = static_cast<Move>(parent_move_[v]);
    v = parent_[v];
  }
  return w;
}

PathCoordinates RauzyDiagram::coordinates(std::uint32_t v) const {
  const std::vector<Move> w = shortest_word(v);
  PathCoordinates c;
  if (!w.empty()) c.first = w.front();
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    c.parts.push_back(static_cast<int>(j - i));
    i = j;
  }
  const int rest = n_ - 1 - std::accumulate(c.parts.begin(), c.parts.end(), 0);
  if (rest <= 0)
    throw Error(ErrorKind::InternalInconsistency, "shortest word too long for coordinates at vertex " +
                                                      std::to_string(v));
  c.parts.push_back(rest);
  return c;
}

std::uint32_t RauzyDiagram::from_coordinates(const PathCoordinates& c) const {
  const LabeledPermutation p = permutation_from_coordinates(n_, c);
  const std::uint32_t v = index_of(p);
  if (coordinates(v).parts != c.parts)
    throw Error(ErrorKind::NotInDiagram, "parts do not encode a shortest word");
  return v;
}

bool RauzyDiagram::strongly_connected() const {
  std::vector<std::vector<std::uint32_t>> rev(size());
  for (std::uint32_t v = 0; v < size(); ++v)
    for (const Edge& e : edges_[v]) rev[e.target].push_back(v);
  std::vector<char> seen(size(), 0);
  std::deque<std::uint32_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t u : rev[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        queue.push_back(u);
      }
  }
  return reached == size();  // forward reachability holds by construction
}

PathCoordinates central_coordinates(int n) { return PathCoordinates{{n - 1}, Move::RightT}; }

LabeledPermutation permutation_from_coordinates(int n, const PathCoordinates& c) {
  if (c.parts.empty()) throw Error(ErrorKind::NotInDiagram, "empty coordinates");
  int total = 0;
  for (int part : c.parts) {
    if (part <= 0) throw Error(ErrorKind::NotInDiagram, "coordinates must be positive");
    total += part;
  }
  if (total != n - 1) throw Error(ErrorKind::NotInDiagram, "coordinates must sum to n-1");
  LabeledPermutation p = central_permutation(n);
  Move m = c.first;
  for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) {
    for (int j = 0; j < c.parts[i]; ++j) p = rauzy_move(p, m).result;
    m = m == Move::RightT ? Move::RightB : Move::RightT;
  }
  return p;
}

}  // namespace hypsys
