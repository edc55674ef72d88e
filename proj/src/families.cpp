#include "hypsys/families.hpp"

#include <numeric>
#include <set>
#include <string>

#include "hypsys/errors.hpp"

namespace hypsys {

namespace {

IntPolynomial X(int d, long c = 1) { return IntPolynomial::monomial(d, c); }

const IntPolynomial& x2_minus_1() {
  static const IntPolynomial p{-1, 0, 1};
  return p;
}

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw Error(kind, what);
}

std::string idx(int n, int k) { return "(" + std::to_string(n) + ", " + std::to_string(k) + ")"; }

void append(std::vector<Move>& w, Move m, int count) { w.insert(w.end(), count, m); }

}  // namespace

int K_of(int n) { return n / 2 - 1; }
int L_of(int n) { return n - 2 - K_of(n); }

LabeledPermutation central_loop_vertex(int n, int k) {
  LabeledPermutation p = central_permutation(n);
  for (int i = 0; i < k; ++i) p = rauzy_move(p, Move::RightT).result;
  return p;
}

std::vector<Move> gamma_nk_word(int n, int k) {
  require(n >= 4 && k >= 1 && k <= K_of(n), ErrorKind::OutOfRange, "gamma_nk needs 1 <= k <= K_n, got " + idx(n, k));
  std::vector<Move> w;
  append(w, Move::RightB, n - 1 - k);
  append(w, Move::RightT, n - 1 - 2 * k);
  return w;
}

std::vector<Move> gamma_nkl_word(int n, int k, int l) {
  require(n >= 4 && k >= 1 && k <= K_of(n) && l >= 1 && l <= 2 * n - 2 - 3 * k, ErrorKind::OutOfRange,
          "gamma_nkl needs 1 <= k <= K_n and 1 <= l <= 2n-2-3k");
  std::vector<Move> w;
  if (l <= n - 2 - k) {
    append(w, Move::RightB, l);
    append(w, Move::RightT, n - 1 - k - l);
    append(w, Move::RightB, n - 1 - k - l);
    append(w, Move::RightT, n - 1 - 2 * k);
  } else {
    append(w, Move::RightB, n - 1 - k);
    append(w, Move::RightT, l - (n - 1 - k));
    append(w, Move::RightB, 2 * (n - 1 - k) - l);
    append(w, Move::RightT, 2 * n - 2 - 3 * k - l);
  }
  return w;
}

RauzyPath gamma_nk(int n, int k) { return RauzyPath::build(central_loop_vertex(n, k), gamma_nk_word(n, k)); }

RauzyPath gamma_nkl(int n, int k, int l) {
  return RauzyPath::build(central_loop_vertex(n, k), gamma_nkl_word(n, k, l));
}

IntPolynomial family_P_nk(int n, int k) {
  require(n >= 4 && k >= 1 && k <= K_of(n), ErrorKind::OutOfRange, "family_P_nk needs 1 <= k <= K_n, got " + idx(n, k));
  const int d = std::gcd(n - 1, k);
  if (d != 1)
    throw MustReduceError((n - 1) / d + 1, k / d,
                          "gcd(n-1, k) = " + std::to_string(d) + "; reduce to " + idx((n - 1) / d + 1, k / d));
  std::set<int> excluded;
  for (int i = 1; i <= k - 1; ++i) {
    const int c = (i * (n - 1) + k - 1) / k;
    excluded.insert(c);
    excluded.insert(c + 1);
  }
  IntPolynomial p = X(n + 1) - X(n - 1, 2) - X(2, 2) + X(0);
  for (int j = 3; j <= n - 2; ++j)
    if (!excluded.count(j)) p -= X(j, 2);
  return p;
}

IntPolynomial family_P_nKl_even(int n, int l) {
  require(n >= 4 && n % 2 == 0 && l >= 1 && l <= L_of(n), ErrorKind::OutOfRange,
          "family_P_nKl_even needs even n >= 4 and 1 <= l <= L_n, got " + idx(n, l));
  IntPolynomial num = X(n - 2 * l + 2) + X(n - 2 * l + 4) + X(n - 1, 2) - X(2 * l + 1) - X(2 * l - 1) - X(4, 2);
  return family_P_nk(n, K_of(n)) - divide_exact(num, x2_minus_1());
}

IntPolynomial family_P_nKl_odd(int n, int l) {
  require(n >= 7 && n % 4 == 3 && l >= 1 && l <= L_of(n), ErrorKind::OutOfRange,
          "family_P_nKl_odd needs n = 3 mod 4 and 1 <= l <= L_n, got " + idx(n, l));
  if (l % 2 == 0)
    throw ReducibleError((n + 1) / 2, l / 2, "even l gives a reducible matrix; reduce to " + idx((n + 1) / 2, l / 2));
  IntPolynomial s = X(0) - X(2, 3) - X((n - 1) / 2, 2) + X((n + 3) / 2, 8) - X((n + 7) / 2, 2) - X(n + 1, 3) + X(n + 3);
  IntPolynomial extra = X((n + 7) / 2 - l) - X(l) + X(l + (n - 1) / 2) - X(n + 3 - l);
  return divide_exact(s + extra * 2, x2_minus_1());
}

IntPolynomial systole_polynomial(int n) {
  require(n >= 4, ErrorKind::OutOfRange, "systole_polynomial needs n >= 4");
  if (n % 2 == 0) return X(n + 1) - X(n - 1, 2) - X(2, 2) + X(0);
  if (n % 4 == 1) return X(n + 1) - X(n - 1, 2) - X((n + 1) / 2, 2) - X(2, 2) + X(0);
  return X(n + 1) - X(n - 1, 2) - X((n + 3) / 2, 4) + X((n - 1) / 2, 4) + X(2, 2) - X(0);
}

IntPolynomial second_polynomial(int n) {
  require(n >= 18 && n % 2 == 0 && n % 6 != 4, ErrorKind::OutOfRange,
          "second_polynomial needs n even, n >= 18, n != 4 mod 6; got n = " + std::to_string(n));
  return X(n + 1) - X(n - 1, 2) - X((2 * n + 2) / 3, 2) - X(n / 3 + 1, 2) - X(2, 2) + X(0);
}

namespace {

// α_i·k ≡ i-1 mod (n-1), α_i in {1..n-1}; returns index j of each label.
std::vector<int> alpha_index(int n, int k) {
  const int m = n - 1;
  int kinv = 1;
  while ((kinv * k) % m != 1 % m) ++kinv;
  std::vector<int> index_of_label(n, 0);
  for (int i = 1; i <= m; ++i) {
    int a = ((i - 1) * kinv) % m;
    if (a == 0) a = m;
    index_of_label[a] = i;
  }
  return index_of_label;
}

void set(IntMatrix& m, int i, int j, long v) { m.at(i - 1, j - 1) = v; }
void add(IntMatrix& m, int i, int j, long v) { m.at(i - 1, j - 1) += v; }

}  // namespace

IntMatrix closed_form_vnk(int n, int k) {
  require(n >= 4 && k >= 1 && k <= K_of(n) && std::gcd(n - 1, k) == 1, ErrorKind::OutOfRange,
          "closed_form_vnk needs gcd(n-1, k) = 1, got " + idx(n, k));
  const std::vector<int> j_of = alpha_index(n, k);
  auto a = [&](int i) {
    const int j = j_of[i];
    if (j >= k + 2 && j <= n - 1 - k) return 2;
    if (j >= n - k && j <= n - 1) return 1;
    return 0;
  };
  IntMatrix v(n);
  set(v, 1, 1, a(n - 1));
  set(v, 1, 2, 2);
  for (int i = 2; i <= n - 2; ++i) set(v, 1, i + 1, a(i));
  set(v, 1, n, 1);
  for (int i = 2; i <= n - 2; ++i) set(v, i, i + 1, 1);
  set(v, n - 1, 1, 1);
  set(v, n, 1, a(n - 1) == 2 ? 1 : 0);
  set(v, n, 2, 1);
  for (int i = 2; i <= n - 2; ++i) set(v, n, i + 1, a(i) == 2 ? 1 : 0);
  set(v, n, n, 1);
  return v;
}

IntMatrix closed_form_vnk_split(int n, int k) {
  require(n >= 4 && k >= 1 && k <= K_of(n) && std::gcd(n - 1, k) == 1, ErrorKind::OutOfRange,
          "closed_form_vnk_split needs gcd(n-1, k) = 1, got " + idx(n, k));
  IntMatrix v(n);
  for (int j = 2; j <= n - 2; ++j) set(v, 1, j, 2);
  set(v, 1, n - 1, 1);
  set(v, 1, n, 1);
  for (int i = 2; i <= n - 2; ++i) set(v, i, i + 1, 1);
  set(v, n - 1, 1, 1);
  for (int j = 2; j <= n - 2; ++j) set(v, n, j, 1);
  set(v, n, n, 1);
  for (int i = 1; i <= k - 1; ++i) {
    const int l = i * (n - 1) / k + 1;
    add(v, 1, l, -1);
    add(v, 1, l + 1, -2);
    add(v, n, l, -1);
    add(v, n, l + 1, -1);
  }
  return v;
}

IntMatrix closed_form_vnKl_even(int n, int l) {
  const int K = K_of(n);
  const int L = L_of(n);
  require(n >= 4 && n % 2 == 0 && ((l >= 1 && l <= L) || l == L + 2), ErrorKind::OutOfRange,
          "closed_form_vnKl_even needs even n and l in 1..L_n or L_n+2, got " + idx(n, l));
  IntMatrix v = closed_form_vnk(n, K);
  if (l == L + 2) {
    for (int j = 1; j <= K - 1; ++j) {
      add(v, 1, 2 * j + 1, 1);
      add(v, n - 2, 2 * j + 1, 1);
    }
    add(v, 1, n, 1);
    add(v, n - 2, n, 1);
    return v;
  }
  add(v, 2 * l, 2, 1);
  add(v, 2 * l, 2 * l + 1, 1);
  for (int j = l; j <= K - 1; ++j) add(v, 2 * l, 2 * j + 3, 2);
  return v;
}

IntMatrix closed_form_vnKl_odd(int n, int l) {
  const int K = K_of(n);
  const int L = L_of(n);
  const int m = (n - 1) / 2;
  require(n >= 7 && n % 4 == 3 && ((l >= 1 && l <= L && l % 2 == 1) || l == L + 2), ErrorKind::OutOfRange,
          "closed_form_vnKl_odd needs n = 3 mod 4 and odd l <= L_n or l = L_n+2, got " + idx(n, l));
  IntMatrix v(n);
  const bool top = l == L + 2;
  for (int i = 1; i <= K; ++i) set(v, i, K + i, 1);
  for (int i = 1; i <= K; ++i) set(v, K + 2 + i, i, 1);
  for (int j = n - 2; j <= n; ++j) set(v, n, j, 1);
  if (top) {
    for (int j = 1; j <= K; ++j) {
      set(v, K + 1, j, 2);
      set(v, K + 2, j, 1);
    }
    set(v, K + 1, n - 2, 2);
    set(v, K + 1, n - 1, 3);
    set(v, K + 1, n, 2);
    set(v, K + 2, n - 1, 2);
    set(v, K + 2, n, 1);
    return v;
  }
  for (int j = 1; j <= K; ++j) set(v, K + 1, j, 1);
  set(v, K + 1, n - 2, 2);
  set(v, K + 1, n - 1, 2);
  set(v, K + 1, n, 1);
  set(v, K + 2, n - 1, 1);
  // B_{n,l} only touches row n-l; its entries are the final values there
  const int r = n - l;
  for (int j = 1; j <= m - l; ++j) set(v, r, j, 2);
  set(v, r, n - 1, 2);
  set(v, r, n - 2, 1);
  return v;
}

}  // namespace hypsys
