#include "hypsys/rome.hpp"

#include <algorithm>

#include "hypsys/errors.hpp"

namespace hypsys {

namespace {

// Topological order of the vertices outside the rome; `ok` is false when a
// cycle avoids it.
std::vector<int> outside_order(const IntMatrix& m, const std::vector<char>& in_rome, bool& ok) {
  const int n = m.size();
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u)
    if (!in_rome[u])
      for (int v = 0; v < n; ++v)
        if (!in_rome[v] && m.at(u, v) != 0) ++indeg[v];
  std::vector<int> order;
  for (int v = 0; v < n; ++v)
    if (!in_rome[v] && indeg[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int u = order[i];
    for (int v = 0; v < n; ++v)
      if (!in_rome[v] && m.at(u, v) != 0 && --indeg[v] == 0) order.push_back(v);
  }
  const auto outside = static_cast<std::size_t>(std::count(in_rome.begin(), in_rome.end(), 0));
  ok = order.size() == outside;
  return order;
}

std::vector<char> membership(int n, const std::vector<int>& rome) {
  std::vector<char> in(n, 0);
  for (int r : rome) {
    if (r < 1 || r > n) throw Error(ErrorKind::NotARome, "rome vertex out of range");
    in[r - 1] = 1;
  }
  return in;
}

}  // namespace

bool is_rome(const IntMatrix& m, const std::vector<int>& rome) {
  bool ok = false;
  outside_order(m, membership(m.size(), rome), ok);
  return ok;
}

IntPolynomial polynomial_determinant(std::vector<std::vector<IntPolynomial>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return IntPolynomial{1};
  int sign = 1;
  IntPolynomial prev{1};
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = {};
    }
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

IntPolynomial rome_charpoly(const IntMatrix& m, const std::vector<int>& rome) {
  const int n = m.size();
  const std::vector<char> in = membership(n, rome);
  bool ok = false;
  const std::vector<int> order = outside_order(m, in, ok);
  if (!ok) throw Error(ErrorKind::NotARome, "a cycle of the support graph avoids the given set");

  std::vector<int> r_idx;
  for (int v = 0; v < n; ++v)
    if (in[v]) r_idx.push_back(v);
  const int r = static_cast<int>(r_idx.size());
  const IntPolynomial Y{0, 1};

  // V_R(Y) with Y = 1/X, minus the identity
  std::vector<std::vector<IntPolynomial>> vr(r, std::vector<IntPolynomial>(r));
  for (int i = 0; i < r; ++i) {
    std::vector<IntPolynomial> f(n);  // first-visit weights from r_i to outside vertices
    for (int v : order) {
      IntPolynomial acc(std::vector<mpz_class>{m.at(r_idx[i], v)});
      for (int u : order) {
        if (u == v) break;
        if (m.at(u, v) != 0 && !f[u].is_zero()) acc += f[u] * m.at(u, v);
      }
      f[v] = acc * Y;
    }
    for (int j = 0; j < r; ++j) {
      IntPolynomial acc(std::vector<mpz_class>{m.at(r_idx[i], r_idx[j])});
      for (int u : order)
        if (m.at(u, r_idx[j]) != 0 && !f[u].is_zero()) acc += f[u] * m.at(u, r_idx[j]);
      vr[i][j] = acc * Y;
      if (i == j) vr[i][j] -= IntPolynomial{1};
    }
  }
  IntPolynomial q = polynomial_determinant(std::move(vr));
  if (q.degree() > n) throw Error(ErrorKind::InternalInconsistency, "rome determinant degree exceeds n");
  std::vector<mpz_class> c(n + 1);
  for (int k = 0; k <= q.degree(); ++k) c[n - k] = q.coeff(k);
  IntPolynomial chi(std::move(c));
  return r % 2 ? -chi : chi;
}

}  // namespace hypsys
