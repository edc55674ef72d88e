#include "hypsys/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hypsys/errors.hpp"

namespace hypsys {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long v : ascending) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, const mpz_class& coeff) {
  std::vector<mpz_class> c(degree + 1);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_descending(const std::vector<long>& descending) {
  std::vector<mpz_class> c;
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) c.emplace_back(*it);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[i];
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(c));
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  if (is_zero()) return 0;
  // den^d * p(num/den), same sign as p(x) since den > 0
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = c_.back();
  mpz_class pw = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    pw *= den;
    acc *= num;
    if (c_[i] != 0) acc += c_[i] * pw;
  }
  return sgn(acc);
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + mpq_class(c_[i]);
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i].get_d();
  return acc;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  IntPolynomial r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

bool IntPolynomial::is_reciprocal() const {
  const int d = degree();
  for (int i = 0; i <= d; ++i)
    if (c_[i] != c_[d - i]) return false;
  return true;
}

bool IntPolynomial::is_antireciprocal() const {
  const int d = degree();
  for (int i = 0; i <= d; ++i)
    if (c_[i] != -c_[d - i]) return false;
  return true;
}

std::string IntPolynomial::ascending_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out.push_back(' ');
    out += c_[i].get_str();
  }
  return out;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& v = c_[i];
    if (v == 0) continue;
    mpz_class mag = abs(v);
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'X';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::size_t IntPolynomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& v : c_) {
    const std::size_t x = std::hash<std::string>{}(v.get_str(16));
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InternalInconsistency, "division by the zero polynomial");
  if (a.is_zero()) return {};
  std::vector<mpz_class> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db)
    throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division: " + a.to_string() +
                                                      " by " + b.to_string());
  std::vector<mpz_class> q(da - db + 1);
  for (int i = da; i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), bc[db].get_mpz_t()))
      throw Error(ErrorKind::InternalInconsistency, "non-integral quotient dividing " +
                                                        a.to_string() + " by " + b.to_string());
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), bc[db].get_mpz_t());
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0)
      throw Error(ErrorKind::InternalInconsistency, "nonzero remainder dividing " + a.to_string() +
                                                        " by " + b.to_string());
  return IntPolynomial(std::move(q));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InternalInconsistency, "pseudo-remainder by zero");
  std::vector<mpz_class> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  int dr = a.degree();
  if (dr < db) return a;
  int steps = dr - db + 1;
  const mpz_class& lb = bc[db];
  while (dr >= db) {
    const mpz_class lr = r[dr];
    for (int i = 0; i <= dr; ++i) r[i] *= lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * bc[j];
    --steps;
    r.resize(dr);
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  IntPolynomial out(std::move(r));
  if (steps > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), steps);
    out *= f;
  }
  return out;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPolynomial g = gcd(p, p.derivative());
  return divide_exact(p.primitive_part(), g).primitive_part();
}

IntPolynomial parse_ascending(const std::string& text) {
  std::istringstream is(text);
  std::vector<mpz_class> c;
  std::string tok;
  while (is >> tok) {
    mpz_class v;
    if (v.set_str(tok, 10) != 0) throw Error(ErrorKind::Parse, "bad coefficient: " + tok);
    c.push_back(v);
  }
  return IntPolynomial(std::move(c));
}

}  // namespace hypsys
