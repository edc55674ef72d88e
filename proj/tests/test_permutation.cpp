#include <algorithm>
#include <random>

#include "doctest.h"
#include "hypsys/errors.hpp"
#include "hypsys/permutation.hpp"

using namespace hypsys;

namespace {

// Right move straight from the definition: the loser is reinserted right after
// the winner in the loser's row.
LabeledPermutation oracle_right(const LabeledPermutation& p, bool top_wins) {
  LabeledPermutation q = p;
  const int a = p.top.back(), b = p.bottom.back();
  auto& row = top_wins ? q.bottom : q.top;
  const int winner = top_wins ? a : b, loser = top_wins ? b : a;
  row.pop_back();
  row.insert(std::find(row.begin(), row.end(), winner) + 1, loser);
  return q;
}

LabeledPermutation random_perm(int n, std::mt19937_64& rng) {
  LabeledPermutation p;
  for (int i = 1; i <= n; ++i) p.top.push_back(i);
  p.bottom = p.top;
  std::shuffle(p.top.begin(), p.top.end(), rng);
  std::shuffle(p.bottom.begin(), p.bottom.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("n = 2 is fixed by both right moves") {
  const auto p = LabeledPermutation::parse("1 2 / 2 1");
  CHECK(rauzy_move(p, Move::RightT).result == p);
  CHECK(rauzy_move(p, Move::RightB).result == p);
}

TEST_CASE("central permutation and s") {
  const auto pi = central_permutation(5);
  CHECK(pi.to_string() == "1 2 3 4 5 / 5 4 3 2 1");
  CHECK(symmetric(pi).same_up_to_relabeling(pi));
  CHECK(symmetric(symmetric(pi)) == pi);
}

TEST_CASE("winner and loser of a right move") {
  const auto pi = central_permutation(4);
  const MoveResult t = rauzy_move(pi, Move::RightT);
  CHECK(t.winner == 4);
  CHECK(t.loser == 1);
  CHECK(t.result.to_string() == "1 2 3 4 / 4 1 3 2");
  const MoveResult b = rauzy_move(pi, Move::RightB);
  CHECK(b.winner == 1);
  CHECK(b.loser == 4);
  CHECK(b.result.to_string() == "1 4 2 3 / 4 3 2 1");
}

TEST_CASE("undefined move") {
  const auto p = LabeledPermutation::parse("1 2 3 / 2 1 3");
  CHECK_THROWS_AS(rauzy_move(p, Move::RightT), Error);
  try {
    rauzy_move(p, Move::RightT);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UndefinedMove);
  }
}

TEST_CASE("parse and format words") {
  CHECK(format_word(parse_word("b^3 t^2")) == "bbbtt");
  CHECK(format_word(parse_word("bbbtt"), true) == "b^3 t^2");
  CHECK(parse_word("TB") == std::vector<Move>{Move::LeftT, Move::LeftB});
  CHECK_THROWS_AS(LabeledPermutation::parse("1 2 / 1 1"), Error);
}

TEST_CASE("property: right moves match the definition") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto p = random_perm(2 + static_cast<int>(rng() % 9), rng);
    for (bool top : {true, false}) {
      if (p.top.back() == p.bottom.back()) continue;
      CHECK(rauzy_move(p, top ? Move::RightT : Move::RightB).result == oracle_right(p, top));
    }
  }
}

TEST_CASE("property: left moves are s-conjugates of right moves") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto p = random_perm(2 + static_cast<int>(rng() % 9), rng);
    if (p.top.front() == p.bottom.front()) continue;
    // top-first wins
    CHECK(rauzy_move(p, Move::LeftT).result == symmetric(rauzy_move(symmetric(p), Move::RightB).result));
    CHECK(rauzy_move(p, Move::LeftB).result == symmetric(rauzy_move(symmetric(p), Move::RightT).result));
    CHECK(rauzy_move(p, Move::LeftT).winner == p.top.front());
    CHECK(rauzy_move(p, Move::LeftB).winner == p.bottom.front());
  }
}

TEST_CASE("property: relabeling invariance") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto p = random_perm(n, rng);
    std::vector<int> sigma(n);
    for (int j = 0; j < n; ++j) sigma[j] = j + 1;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    LabeledPermutation q = p;
    for (int& x : q.top) x = sigma[x - 1];
    for (int& x : q.bottom) x = sigma[x - 1];
    CHECK(q.same_up_to_relabeling(p));
    if (p.top.back() != p.bottom.back())
      CHECK(rauzy_move(q, Move::RightT).result.same_up_to_relabeling(rauzy_move(p, Move::RightT).result));
  }
}
