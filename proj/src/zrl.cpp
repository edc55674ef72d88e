#include "hypsys/zrl.hpp"

#include <deque>
#include <sstream>

#include "hypsys/errors.hpp"
#include "hypsys/matrix.hpp"
#include "hypsys/suspension.hpp"

namespace hypsys {

namespace {

// Throws the matching error when the path is not pure admissible.
void check_pure_admissible(const RauzyDiagram& d, const AdmissiblePath& path) {
  const LabeledPermutation central = central_permutation(d.n());
  if (path.start.size() != d.n()) throw Error(ErrorKind::InvalidSize, "path size differs from the diagram");
  if (path.word.empty()) throw Error(ErrorKind::NotACandidatePath, "empty path");
  LabeledPermutation p = path.start;
  if (p.same_up_to_relabeling(central)) throw Error(ErrorKind::NotPure, "path starts at the central permutation");
  for (Move m : path.word) {
    if (!is_right(m)) throw Error(ErrorKind::NotACandidatePath, "admissible paths use right moves only");
    p = rauzy_move(p, m).result;
    if (p.same_up_to_relabeling(central)) throw Error(ErrorKind::NotPure, "path visits the central permutation");
  }
  const RauzyPath rp = RauzyPath::build(path.start, path.word);
  if (!is_primitive(path_matrix(rp, PathKind::Symmetric)))
    throw Error(ErrorKind::NotPrimitive, "path matrix is not primitive");
}

std::vector<int> merge_zero_parts(std::vector<int> v) {
  for (std::size_t i = 0; i < v.size();) {
    if (v[i] != 0) {
      ++i;
      continue;
    }
    if (i == 0 || i + 1 == v.size()) {
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      if (i > 0) --i;
    } else {
      v[i - 1] += v[i + 1];
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      --i;
    }
  }
  return v;
}

}  // namespace

bool is_pure_admissible(const RauzyDiagram& d, const AdmissiblePath& path) {
  try {
    check_pure_admissible(d, path);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_normalized(const RauzyDiagram& d, const AdmissiblePath& path) {
  if (path.word.empty() || path.word.front() != Move::RightB) return false;
  const auto v = d.find(path.start);
  return v && d.coordinates(*v).parts.size() == 2;
}

AdmissiblePath row_swap(const AdmissiblePath& path) {
  AdmissiblePath out{row_swap(path.start), path.word};
  for (Move& m : out.word) m = m == Move::RightT ? Move::RightB : Move::RightT;
  return out;
}

ZrlStep zrl_step(const RauzyDiagram& d, const AdmissiblePath& path, const ZrlOptions& opts) {
  check_pure_admissible(d, path);
  ZrlStep out;
  AdmissiblePath p = path;
  out.before = d.coordinates(p.start);
  if (out.before.first == Move::RightB) {
    p = row_swap(p);
    out.input_swapped = true;
  }

  const RauzyPath rp = RauzyPath::build(p.start, p.word);
  const EigenData ed = eigen_data(path_matrix(rp, PathKind::Symmetric), p.start);
  const ThetaField field(ed.theta);
  out.theta = ed.theta;

  IetState st{p.start, ed.lambda};
  const int alpha = st.pi.bottom.back();
  const int beta = st.pi.top.front();
  auto run = [&](Side side, int stop_loser, std::vector<Move>& word) {
    for (int i = 0;; ++i) {
      if (i >= opts.max_steps) throw Error(ErrorKind::Budget, "induction did not make the marked letter lose");
      auto step = rauzy_step_dynamic(st, side, field);
      word.push_back(step.move);
      out.winners.push_back(step.winner);
      out.losers.push_back(step.loser);
      st = std::move(step.state);
      if (step.loser == stop_loser) return;
    }
  };
  run(Side::Right, alpha, out.right_word);
  run(Side::Left, beta, out.left_word);

  const LabeledPermutation central = central_permutation(d.n());
  if (st.pi.same_up_to_relabeling(central))
    throw Error(ErrorKind::NotPure, "ZRL reached the central permutation");
  if (d.coordinates(st.pi).first == Move::RightB) {
    st.pi = row_swap(st.pi);
    out.output_swapped = true;
  }

  // Read off the new path: right induction until (s(start), λ/θ) up to relabeling.
  const LabeledPermutation start = st.pi;
  const LabeledPermutation target = symmetric(start);
  const std::vector<IntPolynomial> lambda0 = st.lengths;
  IetState cur = st;
  std::vector<Move> word;
  for (int i = 0;; ++i) {
    if (i >= opts.max_steps) throw Error(ErrorKind::Budget, "new path did not close up within max_steps");
    auto step = rauzy_step_dynamic(cur, Side::Right, field);
    word.push_back(step.move);
    cur = std::move(step.state);
    if (cur.pi.same_up_to_relabeling(central))
      throw Error(ErrorKind::NotPure, "induction from the new data visits the central permutation");
    if (!cur.pi.same_up_to_relabeling(target)) continue;
    const LabeledPermutation s_end = symmetric(cur.pi);
    bool scaled = true;
    for (int pos = 0; pos < d.n() && scaled; ++pos) {
      const int a = s_end.top[pos], b = start.top[pos];
      scaled = field.sign(field.times_theta(cur.lengths[a - 1]) - lambda0[b - 1]) == 0;
    }
    if (scaled) break;
  }
  out.path = AdmissiblePath{start, std::move(word)};
  out.after = d.coordinates(start);
  return out;
}

ZrlResult zrl_normalize(const RauzyDiagram& d, const AdmissiblePath& path, const ZrlOptions& opts) {
  ZrlResult r;
  r.path = path;
  check_pure_admissible(d, path);
  while (!is_normalized(d, r.path)) {
    if (r.iterations >= opts.max_iterations)
      throw Error(ErrorKind::Budget,
                  "ZRL did not normalize within " + std::to_string(opts.max_iterations) + " iterations");
    ZrlStep s = zrl_step(d, r.path, opts);
    r.path = s.path;
    r.trace.push_back(std::move(s));
    ++r.iterations;
  }
  return r;
}

std::set<std::vector<int>> zrl_coding_successors(const std::vector<int>& parts) {
  std::set<std::vector<int>> out;
  const std::size_t k = parts.size();
  if (k < 4) return out;
  const int a = parts[k - 2], b = parts[k - 1], c = parts[0], e = parts[1];
  std::vector<std::vector<int>> right{{a + 1, b - 1}, {a, b - 1, 1}};
  for (int l = 1; l <= b - 2; ++l) right.push_back({a, l, 1, b - 1 - l});
  std::vector<std::vector<int>> left{{c - 1, e + 1}, {1, c - 1, e}};
  for (int m = 1; m <= c - 2; ++m) left.push_back({c - 1 - m, 1, m, e});
  for (const auto& L : left)
    for (const auto& R : right) {
      std::vector<int> v = L;
      v.insert(v.end(), parts.begin() + 2, parts.end() - 2);
      v.insert(v.end(), R.begin(), R.end());
      out.insert(merge_zero_parts(std::move(v)));
    }
  return out;
}

std::string format_trace(const ZrlResult& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const ZrlStep& s = r.trace[i];
    os << i + 1 << '\t' << format_word(s.right_word, true) << '\t' << format_word(s.left_word, true) << "\t(";
    for (std::size_t j = 0; j < s.after.parts.size(); ++j) os << (j ? "," : "") << s.after.parts[j];
    os << ")\t" << s.theta.decimal(12) << (s.output_swapped ? "\tswapped" : "") << '\n';
  }
  return os.str();
}

AdmissiblePath sample_pure_admissible(const RauzyDiagram& d, std::mt19937_64& rng, int max_length, int attempts,
                                      bool below_two) {
  if (d.size() < 2) throw Error(ErrorKind::InvalidSize, "diagram too small to sample from");
  std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(d.size() - 1));
  std::vector<std::vector<std::uint32_t>> rev(d.size());
  for (std::uint32_t v = 0; v < d.size(); ++v)
    for (Move m : {Move::RightT, Move::RightB}) rev[d.edge(v, m).target].push_back(v);

  for (int attempt = 0; attempt < attempts; ++attempt) {
    const std::uint32_t v = pick(rng);
    const PathCoordinates c = d.coordinates(v);
    if (c.parts.size() % 2 != 0 || c.first != Move::RightT) continue;
    const std::uint32_t target = d.symmetric_of(v);
    std::vector<char> reach(d.size(), 0);
    std::deque<std::uint32_t> queue{target};
    reach[target] = 1;
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop_front();
      for (std::uint32_t w : rev[u])
        if (w != 0 && !reach[w]) {
          reach[w] = 1;
          queue.push_back(w);
        }
    }
    if (!reach[v]) continue;
    std::uint32_t cur = v;
    std::vector<Move> word;
    bool arrived = false;
    while (static_cast<int>(word.size()) < max_length) {
      std::vector<Move> options;
      for (Move m : {Move::RightT, Move::RightB}) {
        const std::uint32_t u = d.edge(cur, m).target;
        if (u != 0 && reach[u]) options.push_back(m);
      }
      if (options.empty()) break;
      const Move m = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      word.push_back(m);
      cur = d.edge(cur, m).target;
      if (cur == target) {
        arrived = true;
        break;
      }
    }
    if (!arrived) continue;
    AdmissiblePath path{d.vertex(v), std::move(word)};
    if (!is_pure_admissible(d, path)) continue;
    if (below_two) {
      const RootEnclosure theta = perron_root(charpoly_exact(path_matrix(RauzyPath::build(path.start, path.word), PathKind::Symmetric)));
      if (compare_root(theta, 2) != Ordering::Less) continue;
    }
    return path;
  }
  throw Error(ErrorKind::Budget, "no pure admissible path sampled");
}

}  // namespace hypsys
