#include "hypsys/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "hypsys/errors.hpp"

namespace hypsys {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(ErrorKind::InvalidSize, "matrix rows must have length n");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

void IntMatrix::add_column(int src, int dst) {
  for (int i = 0; i < n_; ++i) at(i, dst) += at(i, src);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const int n = a.n_;
  IntMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const mpz_class& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j)
        if (b.at(k, j) != 0) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

IntMatrix IntMatrix::power(unsigned e) const {
  IntMatrix result = identity(n_);
  IntMatrix base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool IntMatrix::is_nonnegative() const {
  return std::all_of(a_.begin(), a_.end(), [](const mpz_class& v) { return v >= 0; });
}

bool IntMatrix::entrywise_le(const IntMatrix& other) const {
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] > other.a_[i]) return false;
  return true;
}

mpz_class IntMatrix::determinant() const {
  // Bareiss fraction-free elimination
  if (n_ == 0) return 1;
  std::vector<mpz_class> m = a_;
  auto el = [&](int i, int j) -> mpz_class& { return m[static_cast<std::size_t>(i) * n_ + j]; };
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (el(k, k) == 0) {
      int p = k + 1;
      while (p < n_ && el(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (int j = 0; j < n_; ++j) std::swap(el(k, j), el(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) {
        el(i, j) = el(i, j) * el(k, k) - el(i, k) * el(k, j);
        mpz_divexact(el(i, j).get_mpz_t(), el(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = el(k, k);
  }
  return sign * el(n_ - 1, n_ - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

IntMatrix IntMatrix::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::vector<mpz_class>> rows;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<mpz_class> row;
    std::string tok;
    while (ls >> tok) {
      mpz_class v;
      if (v.set_str(tok, 10) != 0) throw Error(ErrorKind::Parse, "bad matrix entry: " + tok);
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorKind::Parse, "matrix is not square");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix elementary_matrix(int winner, int loser, int n) {
  if (winner == loser || winner < 1 || loser < 1 || winner > n || loser > n)
    throw Error(ErrorKind::InvalidTransvection,
                "invalid transvection (" + std::to_string(winner) + ", " + std::to_string(loser) + ")");
  IntMatrix m = IntMatrix::identity(n);
  m.at(winner - 1, loser - 1) = 1;
  return m;
}

RauzyPath RauzyPath::build(const LabeledPermutation& start, const std::vector<Move>& moves) {
  RauzyPath p{start, moves, start, {}};
  p.steps.reserve(moves.size());
  for (Move m : moves) {
    MoveResult r = rauzy_move(p.end, m);
    p.steps.emplace_back(r.winner, r.loser);
    p.end = std::move(r.result);
  }
  return p;
}

IntMatrix transition_matrix(const RauzyPath& path) {
  IntMatrix v = IntMatrix::identity(path.size());
  for (auto [w, l] : path.steps) v.add_column(w - 1, l - 1);
  return v;
}

IntMatrix relabeling_matrix(const LabeledPermutation& target, const LabeledPermutation& start) {
  const int n = start.size();
  IntMatrix p(n);
  for (int pos = 0; pos < n; ++pos) p.at(target.top[pos] - 1, start.top[pos] - 1) = 1;
  return p;
}

bool is_symmetric_path(const RauzyPath& path) {
  return symmetric(path.end).reduced() == path.start.reduced();
}

bool is_closed_path(const RauzyPath& path) { return path.end.reduced() == path.start.reduced(); }

IntMatrix path_matrix(const RauzyPath& path, PathKind kind) {
  const bool sym = is_symmetric_path(path);
  const bool closed = is_closed_path(path);
  bool use_symmetric;
  switch (kind) {
    case PathKind::Symmetric:
      if (!sym) throw Error(ErrorKind::NotACandidatePath, "end is not s(start) up to relabeling");
      use_symmetric = true;
      break;
    case PathKind::Closed:
      if (!closed) throw Error(ErrorKind::NotACandidatePath, "end is not start up to relabeling");
      use_symmetric = false;
      break;
    default:
      if (!sym && !closed)
        throw Error(ErrorKind::NotACandidatePath,
                    "end matches neither s(start) nor start up to relabeling");
      use_symmetric = sym;
  }
  const LabeledPermutation target = use_symmetric ? symmetric(path.end) : path.end;
  return transition_matrix(path) * relabeling_matrix(target, path.start);
}

bool is_primitive(const IntMatrix& m) {
  const int n = m.size();
  if (n == 0) return false;
  const int words = (n + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  std::vector<Bits> s(n, Bits(words, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) != 0) s[i][j / 64] |= std::uint64_t{1} << (j % 64);
  auto mul = [&](const std::vector<Bits>& a, const std::vector<Bits>& b) {
    std::vector<Bits> c(n, Bits(words, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (a[i][k / 64] >> (k % 64) & 1u)
          for (int w = 0; w < words; ++w) c[i][w] |= b[k][w];
    return c;
  };
  // M^e for e = (n-1)^2 + 1
  unsigned e = static_cast<unsigned>((n - 1) * (n - 1) + 1);
  std::vector<Bits> result;
  std::vector<Bits> base = s;
  bool have = false;
  while (e) {
    if (e & 1u) {
      result = have ? mul(result, base) : base;
      have = true;
    }
    e >>= 1;
    if (e) base = mul(base, base);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(result[i][j / 64] >> (j % 64) & 1u)) return false;
  return true;
}

IntPolynomial charpoly_exact(const IntMatrix& a) {
  const int n = a.size();
  std::vector<mpz_class> vect{1};  // descending coefficients
  for (int r = 0; r < n; ++r) {
    // Toeplitz column [1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C]
    std::vector<mpz_class> t(r + 2);
    t[0] = 1;
    t[1] = -a.at(r, r);
    std::vector<mpz_class> col(r);
    for (int i = 0; i < r; ++i) col[i] = a.at(i, r);
    for (int k = 0; k < r; ++k) {
      mpz_class dot = 0;
      for (int j = 0; j < r; ++j) dot += a.at(r, j) * col[j];
      t[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<mpz_class> next(r);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            if (a.at(i, j) != 0) next[i] += a.at(i, j) * col[j];
        col = std::move(next);
      }
    }
    std::vector<mpz_class> nv(r + 2);
    for (int i = 0; i <= r + 1; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) nv[i] += t[i - j] * vect[j];
    vect = std::move(nv);
  }
  std::reverse(vect.begin(), vect.end());
  return IntPolynomial(std::move(vect));
}

mpz_class min_column_sum(const IntMatrix& m) {
  const int n = m.size();
  mpz_class best;
  for (int j = 0; j < n; ++j) {
    mpz_class s = 0;
    for (int i = 0; i < n; ++i) s += m.at(i, j);
    if (j == 0 || s < best) best = s;
  }
  return best;
}

}  // namespace hypsys
