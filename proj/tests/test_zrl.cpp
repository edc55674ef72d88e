#include <algorithm>
#include <random>

#include "doctest.h"
#include "hypsys/errors.hpp"
#include "hypsys/families.hpp"
#include "hypsys/matrix.hpp"
#include "hypsys/zrl.hpp"

using namespace hypsys;

namespace {

RootEnclosure theta_of(const AdmissiblePath& p) {
  return perron_root(charpoly_exact(path_matrix(RauzyPath::build(p.start, p.word), PathKind::Symmetric)));
}

}  // namespace

TEST_CASE("coding successors") {
  using V = std::vector<int>;
  CHECK(zrl_coding_successors({2, 3}).empty());
  const auto s = zrl_coding_successors({1, 2, 3, 1});
  CHECK(s.count(V{3, 4}) == 1);
  const auto t = zrl_coding_successors({1, 2, 5, 6, 1});
  CHECK(t.count(V{3, 5, 7}) == 1);
  // c = 3, e = 1 on the left; a = 1, b = 3 on the right
  const auto u = zrl_coding_successors({3, 1, 4, 1, 3});
  CHECK(u.count(V{2, 2, 4, 2, 2}) == 1);
  CHECK(u.count(V{1, 2, 1, 4, 1, 1, 1, 1}) == 1);
  CHECK(u.size() == 3 * 3);
}

TEST_CASE("coding successors have positive parts") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> parts(4 + 2 * (rng() % 3));
    for (int& x : parts) x = 1 + static_cast<int>(rng() % 4);
    for (const auto& v : zrl_coding_successors(parts)) {
      CHECK_FALSE(v.empty());
      for (int x : v) CHECK(x > 0);
    }
  }
}

TEST_CASE("row swap is an involution") {
  const AdmissiblePath p{central_loop_vertex(6, 2), parse_word("bbtbt")};
  const AdmissiblePath q = row_swap(row_swap(p));
  CHECK(q.start == p.start);
  CHECK(q.word == p.word);
  CHECK(row_swap(p).word == parse_word("ttbtb"));
}

TEST_CASE("purity checks") {
  const RauzyDiagram d = RauzyDiagram::build(6);
  CHECK_FALSE(is_pure_admissible(d, AdmissiblePath{central_permutation(6), parse_word("b")}));
  CHECK_THROWS_AS(zrl_step(d, AdmissiblePath{central_permutation(6), parse_word("bt")}), Error);
  CHECK_FALSE(is_pure_admissible(d, AdmissiblePath{central_loop_vertex(6, 2), {}}));
  const AdmissiblePath g{central_loop_vertex(6, 2), gamma_nk_word(6, 2)};
  CHECK(is_pure_admissible(d, g));
  CHECK(is_normalized(d, g));
}

TEST_CASE("normalization keeps θ and ends normalized") {
  std::mt19937_64 rng(5);
  for (int n : {6, 7}) {
    const RauzyDiagram d = RauzyDiagram::build(n);
    for (int i = 0; i < 15; ++i) {
      const AdmissiblePath p = sample_pure_admissible(d, rng, 3 * n);
      CHECK(is_pure_admissible(d, p));
      const RootEnclosure theta = theta_of(p);
      CHECK(compare_root(theta, 2) == Ordering::Less);
      ZrlResult r;
      try {
        r = zrl_normalize(d, p);
      } catch (const Error& e) {
        FAIL_CHECK(e.what());
        continue;
      }
      CHECK(is_normalized(d, r.path));
      CHECK(compare_roots(theta_of(r.path), theta) == Ordering::Equal);
      CHECK(r.iterations == static_cast<int>(r.trace.size()));
      for (const ZrlStep& s : r.trace) {
        CHECK(compare_roots(s.theta, theta) == Ordering::Equal);
        CHECK_FALSE(s.right_word.empty());
        CHECK_FALSE(s.left_word.empty());
        CHECK(s.right_word.back() == Move::RightT);
        CHECK(s.left_word.back() == Move::LeftB);
        for (std::size_t j = 0; j + 1 < s.right_word.size(); ++j) CHECK(s.right_word[j] == Move::RightB);
        for (std::size_t j = 0; j + 1 < s.left_word.size(); ++j) CHECK(s.left_word[j] == Move::LeftT);
        if (s.before.parts.size() >= 4) CHECK(zrl_coding_successors(s.before.parts).count(s.after.parts) == 1);
      }
    }
  }
}

TEST_CASE("central loop start with first step t is a fixed point") {
  std::mt19937_64 rng(9);
  const RauzyDiagram d = RauzyDiagram::build(6);
  int tried = 0;
  for (int attempt = 0; attempt < 400 && tried < 10; ++attempt) {
    const AdmissiblePath p = sample_pure_admissible(d, rng, 18);
    const auto c = d.coordinates(p.start);
    if (c.parts.size() != 2 || p.word.front() != Move::RightT) continue;
    ++tried;
    const ZrlStep s = zrl_step(d, p);
    CHECK(s.path.start.same_up_to_relabeling(p.start));
  }
  CHECK(tried > 0);
}

TEST_CASE("a normalized path that ZRL moves off the central loop") {
  const RauzyDiagram d = RauzyDiagram::build(6);
  const AdmissiblePath p{central_loop_vertex(6, 2), parse_word("bbtbt")};
  REQUIRE(is_pure_admissible(d, p));
  REQUIRE(is_normalized(d, p));
  const ZrlStep s = zrl_step(d, p);
  CHECK(format_word(s.right_word) == "bbt");
  CHECK(format_word(s.left_word) == "TB");
  CHECK(d.coordinates(s.path.start).parts.size() != 2);
  CHECK(compare_roots(theta_of(s.path), theta_of(p)) == Ordering::Equal);
}

TEST_CASE("trace format") {
  const RauzyDiagram d = RauzyDiagram::build(6);
  std::mt19937_64 rng(2);
  const AdmissiblePath p = sample_pure_admissible(d, rng, 18);
  const ZrlResult r = zrl_normalize(d, p);
  const std::string text = format_trace(r);
  CHECK(static_cast<int>(std::count(text.begin(), text.end(), '\n')) == r.iterations);
}

TEST_CASE("budget") {
  const RauzyDiagram d = RauzyDiagram::build(6);
  std::mt19937_64 rng(4);
  AdmissiblePath p;
  for (;;) {
    p = sample_pure_admissible(d, rng, 18);
    if (!is_normalized(d, p)) break;
  }
  ZrlOptions o;
  o.max_iterations = 0;
  CHECK_THROWS_AS(zrl_normalize(d, p, o), Error);
}
