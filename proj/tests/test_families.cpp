#include <numeric>

#include "doctest.h"
#include "hypsys/errors.hpp"
#include "hypsys/families.hpp"
#include "hypsys/matrix.hpp"
#include "hypsys/roots.hpp"
#include "hypsys/rome.hpp"

using namespace hypsys;

namespace {

const IntPolynomial kXPlus1{1, 1};

IntPolynomial chi_path(const RauzyPath& p) { return charpoly_exact(path_matrix(p)); }

void put(IntMatrix& m, int i, int j, long v) { m.at(i - 1, j - 1) = v; }
void bump(IntMatrix& m, int i, int j, long v) { m.at(i - 1, j - 1) += v; }

}  // namespace

TEST_CASE("K_n and L_n") {
  CHECK(K_of(4) == 1);
  CHECK(L_of(4) == 1);
  CHECK(K_of(18) == 8);
  CHECK(L_of(18) == 8);
  CHECK(K_of(7) == 2);
  CHECK(L_of(7) == 3);
}

TEST_CASE("closed forms at small n") {
  CHECK(family_P_nk(4, 1) == IntPolynomial::from_descending({1, 0, -2, -2, 0, 1}));
  CHECK(second_polynomial(18) ==
        IntPolynomial::from_descending({1, 0, -2, 0, 0, 0, 0, -2, 0, 0, 0, 0, -2, 0, 0, 0, 0, -2, 0, 1}));
  CHECK_THROWS_AS(second_polynomial(22), Error);  // 22 = 4 mod 6
  CHECK_THROWS_AS(second_polynomial(16), Error);
}

TEST_CASE("reduction errors carry the reduced indices") {
  try {
    family_P_nk(9, 2);
    FAIL("expected MustReduceError");
  } catch (const MustReduceError& e) {
    CHECK(e.n_reduced == 5);
    CHECK(e.k_reduced == 1);
  }
  try {
    family_P_nKl_odd(11, 2);
    FAIL("expected ReducibleError");
  } catch (const ReducibleError& e) {
    CHECK(e.kind() == ErrorKind::Reducible);
  }
  // θ_{9,2} = θ_{5,1} through the path matrices
  CHECK(compare_roots(perron_root(chi_path(gamma_nk(9, 2))), perron_root(family_P_nk(5, 1))) == Ordering::Equal);
}

TEST_CASE("(X+1) charpoly of γ_{n,k} is P_{n,k}, n <= 14") {
  for (int n = 4; n <= 14; ++n)
    for (int k = 1; k <= K_of(n); ++k) {
      if (std::gcd(n - 1, k) != 1) continue;
      CAPTURE(n);
      CAPTURE(k);
      const IntPolynomial p = family_P_nk(n, k);
      CHECK(chi_path(gamma_nk(n, k)) * kXPlus1 == p);
      CHECK(p.is_reciprocal());
      CHECK(charpoly_exact(closed_form_vnk(n, k)) == chi_path(gamma_nk(n, k)));
    }
}

TEST_CASE("K_n families") {
  for (int n = 4; n <= 14; n += 2)
    for (int l = 1; l <= L_of(n); ++l) {
      CAPTURE(n);
      CAPTURE(l);
      CHECK(chi_path(gamma_nkl(n, K_of(n), l)) * kXPlus1 == family_P_nKl_even(n, l));
    }
  for (int n : {7, 11})
    for (int l = 1; l <= L_of(n); l += 2) {
      CAPTURE(n);
      CAPTURE(l);
      CHECK(chi_path(gamma_nkl(n, K_of(n), l)) * kXPlus1 == family_P_nKl_odd(n, l));
    }
}

TEST_CASE("primitivity pattern") {
  for (int n = 4; n <= 19; ++n) {
    CAPTURE(n);
    CHECK(is_primitive(path_matrix(gamma_nk(n, K_of(n)))) == (n % 4 != 3));
    if (n % 4 == 3)
      for (int l = 1; l <= L_of(n); ++l) CHECK(is_primitive(path_matrix(gamma_nkl(n, K_of(n), l))) == (l % 2 == 1));
  }
}

TEST_CASE("literal reading: even n, l = L_n+2 with columns 2j does not match") {
  for (int n = 6; n <= 14; n += 2) {
    const int K = K_of(n), l = L_of(n) + 2;
    IntMatrix literal = closed_form_vnk(n, K);
    for (int j = 1; j <= K - 1; ++j) {
      bump(literal, 1, 2 * j, 1);
      bump(literal, n - 2, 2 * j, 1);
    }
    bump(literal, 1, n, 1);
    bump(literal, n - 2, n, 1);
    const IntPolynomial path = chi_path(gamma_nkl(n, K, l));
    CAPTURE(n);
    CHECK(charpoly_exact(literal) != path);
    CHECK(charpoly_exact(closed_form_vnKl_even(n, l)) == path);
  }
}

TEST_CASE("literal reading: additive A_n + B_{n,l} does not match for n = 3 mod 4") {
  for (int n : {7, 11, 15}) {
    const int K = K_of(n), m = (n - 1) / 2;
    for (int l = 1; l <= L_of(n); l += 2) {
      IntMatrix a(n);
      for (int i = 1; i <= K; ++i) {
        put(a, i, K + i, 1);
        put(a, K + 2 + i, i, 1);
        put(a, K + 1, i, 1);
      }
      put(a, K + 1, n - 2, 2);
      put(a, K + 1, n - 1, 2);
      put(a, K + 1, n, 1);
      put(a, K + 2, n - 1, 1);
      for (int j = n - 2; j <= n; ++j) put(a, n, j, 1);
      for (int i = 1; i <= m - l; ++i) bump(a, n - l, i, 2);
      bump(a, n - l, l, 1);
      bump(a, n - l, n - 1, 2);
      bump(a, n - l, n - 2, 1);
      const IntPolynomial path = chi_path(gamma_nkl(n, K, l));
      CAPTURE(n);
      CAPTURE(l);
      CHECK(charpoly_exact(a) != path);
      CHECK(charpoly_exact(closed_form_vnKl_odd(n, l)) == path);
    }
  }
}

TEST_CASE("literal reading: δ(V²) at l = L_n+2, n = 3 mod 4, is 4 and not above 4") {
  for (int n : {7, 11, 15, 19}) {
    const IntMatrix v = path_matrix(gamma_nkl(n, K_of(n), L_of(n) + 2));
    CAPTURE(n);
    CHECK(min_column_sum(v.power(2)) == 4);
    CHECK(min_column_sum(closed_form_vnKl_odd(n, L_of(n) + 2).power(2)) == 4);
    // the bound θ > 2 still holds
    CHECK(compare_root(perron_root(charpoly_exact(v)), 2) == Ordering::Greater);
  }
  for (int n = 6; n <= 16; n += 2) CHECK(min_column_sum(path_matrix(gamma_nkl(n, K_of(n), L_of(n) + 2)).power(4)) == 6);
}

TEST_CASE("rome method") {
  for (int n = 4; n <= 12; ++n)
    for (int k = 1; k <= K_of(n); ++k) {
      if (std::gcd(n - 1, k) != 1) continue;
      const IntMatrix v = closed_form_vnk(n, k);
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 1);
      CHECK(rome_charpoly(v, {1, n}) == charpoly_exact(v));
      CHECK(rome_charpoly(v, all) == charpoly_exact(v));
    }
  for (int n : {7, 11})
    for (int l = 1; l <= L_of(n); l += 2) {
      const IntMatrix v = closed_form_vnKl_odd(n, l);
      CHECK(rome_charpoly(v, {n, n - 1, (n - 1) / 2}) == charpoly_exact(v));
    }
  const IntMatrix v = closed_form_vnk(6, 1);
  CHECK_FALSE(is_rome(v, {3}));
  CHECK_THROWS_AS(rome_charpoly(v, {3}), Error);
}
