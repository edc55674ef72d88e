#include <random>

#include "doctest.h"
#include "hypsys/diagram.hpp"
#include "hypsys/errors.hpp"
#include "hypsys/families.hpp"
#include "hypsys/suspension.hpp"

using namespace hypsys;

namespace {

// V·x - c·x evaluated entrywise in Z[θ]; c·x is θ·x when `times_theta`.
bool is_eigenvector(const IntMatrix& v, const std::vector<IntPolynomial>& x, const ThetaField& f, bool theta) {
  const int n = v.size();
  for (int i = 0; i < n; ++i) {
    IntPolynomial lhs;
    for (int j = 0; j < n; ++j) lhs += x[j] * v.at(i, j);
    const IntPolynomial rhs = theta ? f.times_theta(x[i]) : x[i];
    const IntPolynomial diff = theta ? lhs - rhs : f.times_theta(lhs) - rhs;
    if (f.sign(diff) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("height interval agrees with the clause check") {
  std::mt19937_64 rng(7);
  for (int n : {4, 5, 6}) {
    const RauzyDiagram d = RauzyDiagram::build(n);
    for (int trial = 0; trial < 300; ++trial) {
      const LabeledPermutation pi = d.vertex(static_cast<std::uint32_t>(rng() % d.size()));
      std::vector<mpq_class> tau(n);
      for (auto& t : tau) t = static_cast<long>(rng() % 9) - 4;
      const HeightInterval hi = height_interval(pi, tau);
      const bool clauses = hi.clause_iii_holds && hi.clause_iv_holds;
      bool any = false;
      for (int h2 = -40; h2 <= 40; ++h2) {
        const mpq_class h(h2, 2);
        if (!is_weak_suspension(pi, tau, h)) continue;
        any = true;
        CHECK(hi.nonempty);
        CHECK(clauses);
        CHECK(h.get_d() > hi.lo);
        CHECK(h.get_d() < hi.hi);
      }
      // integer endpoints, so a nonempty open interval contains a half-integer
      if (hi.nonempty && clauses) CHECK(any);
    }
  }
}

TEST_CASE("eigen-data of γ_{4,1} and γ_{6,2}") {
  for (auto [n, k] : {std::pair{4, 1}, std::pair{6, 2}, std::pair{8, 3}}) {
    const RauzyPath p = gamma_nk(n, k);
    const IntMatrix v = path_matrix(p);
    const EigenData ed = eigen_data(v, p.start);
    const ThetaField field(ed.theta);
    CAPTURE(n);
    CHECK(compare_roots(ed.theta, perron_root(family_P_nk(n, k))) == Ordering::Equal);
    CHECK(is_eigenvector(v, ed.lambda, field, true));
    CHECK(is_eigenvector(v, ed.tau, field, false));
    for (const auto& l : ed.lambda) CHECK(field.sign(l) > 0);
    CHECK(ed.heights.nonempty);
    double total = 0;
    for (double x : ed.lambda_approx) total += x;
    CHECK(total == doctest::Approx(1.0));
  }
}

TEST_CASE("dynamic replay reproduces the path") {
  for (auto [n, k] : {std::pair{4, 1}, std::pair{6, 1}, std::pair{5, 1}}) {
    const RauzyPath p = gamma_nk(n, k);
    const EigenData ed = eigen_data(path_matrix(p), p.start);
    const ThetaField field(ed.theta);
    IetState st{p.start, ed.lambda};
    std::vector<Move> replay;
    for (std::size_t i = 0; i < p.moves.size(); ++i) {
      auto step = rauzy_step_dynamic(st, Side::Right, field);
      replay.push_back(step.move);
      st = step.state;
    }
    CAPTURE(n);
    CHECK(replay == p.moves);
    CHECK(st.pi.same_up_to_relabeling(symmetric(p.start)));
    const LabeledPermutation s_end = symmetric(st.pi);
    for (int pos = 0; pos < n; ++pos)
      CHECK(field.sign(field.times_theta(st.lengths[s_end.top[pos] - 1]) - ed.lambda[p.start.top[pos] - 1]) == 0);
  }
}

TEST_CASE("eigen-data rejects non-primitive input") {
  IntMatrix swap(3);
  swap.at(0, 1) = swap.at(1, 2) = swap.at(2, 0) = 1;
  CHECK_THROWS_AS(eigen_data(swap, central_permutation(3)), Error);
  try {
    eigen_data(swap, central_permutation(3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrimitive);
  }
  CHECK_THROWS_AS(eigen_data(IntMatrix::identity(4), central_permutation(3)), Error);
}

TEST_CASE("left step is the symmetric conjugate of the right step") {
  std::mt19937_64 rng(3);
  const RauzyDiagram d = RauzyDiagram::build(6);
  for (int trial = 0; trial < 200; ++trial) {
    RationalIetState st{d.vertex(static_cast<std::uint32_t>(rng() % d.size())), std::vector<mpq_class>(6)};
    for (auto& l : st.lengths) l = mpq_class(static_cast<long>(rng() % 1000 + 1), static_cast<long>(rng() % 7 + 1));
    const int a = st.pi.top.front(), b = st.pi.bottom.front();
    if (st.lengths[a - 1] == st.lengths[b - 1]) continue;
    const auto left = rauzy_step_dynamic(st, Side::Left);
    const auto right = rauzy_step_dynamic(RationalIetState{symmetric(st.pi), st.lengths}, Side::Right);
    CHECK(left.state.pi == symmetric(right.state.pi));
    CHECK(left.state.lengths == right.state.lengths);
    CHECK(left.winner == right.winner);
    CHECK(left.loser == right.loser);
  }
}

TEST_CASE("rational right step subtracts the loser") {
  RationalIetState st{central_permutation(4), {mpq_class(3), mpq_class(2), mpq_class(2), mpq_class(1)}};
  const auto step = rauzy_step_dynamic(st, Side::Right);
  // top-last 4 vs bottom-last 1: 1 < 3, so b
  CHECK(step.move == Move::RightB);
  CHECK(step.winner == 1);
  CHECK(step.loser == 4);
  CHECK(step.state.lengths[0] == 2);
  CHECK(step.state.lengths[3] == 1);
}
