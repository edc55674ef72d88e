#include <random>

#include "doctest.h"
#include "hypsys/diagram.hpp"
#include "hypsys/errors.hpp"
#include "hypsys/families.hpp"
#include "hypsys/matrix.hpp"
#include "hypsys/search.hpp"

using namespace hypsys;

namespace {

// Faddeev-LeVerrier over Q: an independent route to det(X·I - M).
IntPolynomial oracle_charpoly(const IntMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n)), mk(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<mpq_class>> prev(n, std::vector<mpq_class>(n));  // M_{k-1}
  for (int k = 1; k <= n; ++k) {
    // M_k = A·M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A·M_k)/k
    std::vector<std::vector<mpq_class>> cur(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpq_class s = 0;
        if (k > 1)
          for (int t = 0; t < n; ++t) s += a[i][t] * prev[t][j];
        cur[i][j] = s + (i == j ? c[n - k + 1] : mpq_class(0));
      }
    mpq_class tr = 0;
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) tr += a[i][t] * cur[t][i];
    c[n - k] = -tr / k;
    prev = cur;
  }
  std::vector<mpz_class> z(n + 1);
  for (int i = 0; i <= n; ++i) {
    REQUIRE(c[i].get_den() == 1);
    z[i] = c[i].get_num();
  }
  return IntPolynomial(std::move(z));
}

bool oracle_primitive(const IntMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<int>> s(n, std::vector<int>(n)), p;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = m.at(i, j) != 0;
  p = s;
  for (int e = 1; e <= (n - 1) * (n - 1) + 1; ++e) {
    bool all = true;
    for (auto& row : p)
      for (int x : row) all = all && x;
    if (all) return true;
    std::vector<std::vector<int>> q(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int t = 0; t < n && !q[i][j]; ++t) q[i][j] = p[i][t] && s[t][j];
    p = q;
  }
  return false;
}

RauzyPath random_symmetric_path(const RauzyDiagram& d, std::mt19937_64& rng) {
  while (true) {
    const std::uint32_t v = 1 + rng() % (d.size() - 1);
    const std::uint32_t target = d.symmetric_of(v);
    std::uint32_t cur = v;
    std::vector<Move> word;
    for (int i = 0; i < 4 * d.n(); ++i) {
      const Move m = rng() % 2 ? Move::RightT : Move::RightB;
      word.push_back(m);
      cur = d.edge(cur, m).target;
      if (cur == target) return RauzyPath::build(d.vertex(v), word);
    }
  }
}

}  // namespace

TEST_CASE("elementary matrices") {
  const IntMatrix e = elementary_matrix(2, 3, 4);
  CHECK(e.at(1, 2) == 1);
  CHECK(e.determinant() == 1);
  CHECK_THROWS_AS(elementary_matrix(2, 2, 4), Error);
  CHECK_THROWS_AS(elementary_matrix(0, 2, 4), Error);
}

TEST_CASE("γ_{4,1}: matrix, relabeling direction and polynomial") {
  const RauzyPath p = gamma_nk(4, 1);
  CHECK(format_word(p.moves) == "bbt");
  const IntMatrix v = path_matrix(p);
  CHECK(charpoly_exact(v) == (IntPolynomial{1, -1, -1, -1, 1}));
  // the transposed relabeling gives another polynomial
  const IntMatrix wrong = transition_matrix(p) * [&] {
    IntMatrix q = relabeling_matrix(symmetric(p.end), p.start);
    IntMatrix t(q.size());
    for (int i = 0; i < q.size(); ++i)
      for (int j = 0; j < q.size(); ++j) t.at(i, j) = q.at(j, i);
    return t;
  }();
  CHECK(charpoly_exact(wrong) == (IntPolynomial{1, -2, 1, -2, 1}));
  CHECK(is_primitive(v));
}

TEST_CASE("min column sum") {
  CHECK(min_column_sum(IntMatrix::identity(5)) == 1);
  CHECK(min_column_sum(IntMatrix::from_rows({{1, 2}, {3, 0}})) == 2);
}

TEST_CASE("text form round trip") {
  const IntMatrix m = IntMatrix::from_rows({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  CHECK(IntMatrix::parse(m.to_string()) == m);
}

TEST_CASE("property: charpoly, primitivity and symplectic structure on random symmetric paths") {
  std::mt19937_64 rng(13);
  for (int n : {4, 5, 6, 7, 8}) {
    const RauzyDiagram d = RauzyDiagram::build(n);
    for (int i = 0; i < 30; ++i) {
      const RauzyPath p = random_symmetric_path(d, rng);
      const IntMatrix v = path_matrix(p, PathKind::Symmetric);
      const IntPolynomial chi = charpoly_exact(v);
      CHECK(chi == oracle_charpoly(v));
      CHECK(is_primitive(v) == oracle_primitive(v));
      CHECK(abs(v.determinant()) == 1);
      CHECK((chi.is_reciprocal() || chi.is_antireciprocal()));
      double row_max = 0;  // bounds every eigenvalue modulus
      for (int r = 0; r < v.size(); ++r) {
        double s = 0;
        for (int c = 0; c < v.size(); ++c) s += v.at(r, c).get_d();
        row_max = std::max(row_max, s);
      }
      CHECK(charpoly_fast(v, row_max) == chi);
      CHECK(charpoly_fast(v, 1e6) == chi);
    }
  }
}

TEST_CASE("property: deleting an inserted loop does not increase V or θ") {
  std::mt19937_64 rng(17);
  int strict = 0;
  for (int n : {5, 6, 7, 8}) {
    const RauzyDiagram d = RauzyDiagram::build(n);
    for (int i = 0; i < 40; ++i) {
      const RauzyPath base = random_symmetric_path(d, rng);
      // insert a closed loop at a random vertex of the path
      const std::size_t at = rng() % (base.moves.size() + 1);
      std::uint32_t v = d.index_of(base.start);
      for (std::size_t j = 0; j < at; ++j) v = d.edge(v, base.moves[j]).target;
      std::vector<Move> loop;
      std::uint32_t cur = v;
      for (int step = 0; step < 200; ++step) {
        const Move m = rng() % 2 ? Move::RightT : Move::RightB;
        loop.push_back(m);
        cur = d.edge(cur, m).target;
        if (cur == v) break;
      }
      if (cur != v) continue;
      std::vector<Move> longer(base.moves.begin(), base.moves.begin() + static_cast<std::ptrdiff_t>(at));
      longer.insert(longer.end(), loop.begin(), loop.end());
      longer.insert(longer.end(), base.moves.begin() + static_cast<std::ptrdiff_t>(at), base.moves.end());
      const IntMatrix small = path_matrix(base, PathKind::Symmetric);
      const IntMatrix big = path_matrix(RauzyPath::build(base.start, longer), PathKind::Symmetric);
      CHECK(small.entrywise_le(big));
      if (!is_primitive(big) || !is_primitive(small)) continue;
      const Ordering o = compare_roots(perron_root(charpoly_exact(small)), perron_root(charpoly_exact(big)));
      CHECK(o == Ordering::Less);
      strict += o == Ordering::Less;
    }
  }
  CHECK(strict > 20);
}
