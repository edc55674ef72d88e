#include "hypsys/roots.hpp"

#include "hypsys/errors.hpp"

namespace hypsys {

SturmChain::SturmChain(const IntPolynomial& squarefree) {
  chain_.push_back(squarefree);
  if (squarefree.degree() < 1) return;
  chain_.push_back(squarefree.derivative().primitive_part());
  while (chain_.back().degree() > 0) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    // prem multiplies by lc(b)^k; undo a negative factor so the sign is that
    // of the true remainder
    const int k = a.degree() - b.degree() + 1;
    if (b.leading() < 0 && k % 2 == 1) r = -r;
    if (r.is_zero()) break;  // only for non-square-free input
    mpz_class g = abs(r.content());
    std::vector<mpz_class> c = r.coefficients();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    chain_.push_back(-IntPolynomial(std::move(c)));
  }
}

int SturmChain::sign_variations(const mpq_class& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmChain::count(const mpq_class& a, const mpq_class& b) const {
  return sign_variations(a) - sign_variations(b);
}

mpq_class pow2_inv(int bits) {
  mpz_class den = 1;
  den <<= bits;
  return mpq_class(1, den);
}

mpq_class pow10_inv(int digits) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, digits);
  return mpq_class(1, den);
}

const mpq_class& dedup_width() {
  static const mpq_class w = pow10_inv(30);
  return w;
}

const mpq_class& display_width() {
  static const mpq_class w = pow10_inv(12);
  return w;
}

void RootEnclosure::bisect() {
  if (exact()) return;
  mpq_class mid = (lo_ + hi_) / 2;
  const int s = defining().sign_at(mid);
  if (s == 0) {
    lo_ = hi_ = mid;
  } else if (s == sign_hi_) {
    hi_ = mid;
  } else {
    lo_ = mid;
  }
}

void RootEnclosure::refine(const mpq_class& width) {
  while (!exact() && hi_ - lo_ >= width) bisect();
}

std::string RootEnclosure::decimal(int digits) const {
  RootEnclosure r = *this;
  r.refine(pow10_inv(digits + 4));
  mpq_class mid = (r.lo_ + r.hi_) / 2;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpq_class scaled = mid * scale + mpq_class(1, 2);
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const bool negative = rounded < 0;
  std::string s = mpz_class(abs(rounded)).get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return negative ? "-" + s : s;
}

double RootEnclosure::approx() const { return mpq_class((lo_ + hi_) / 2).get_d(); }

namespace {

mpz_class cauchy_bound(const IntPolynomial& q) {
  mpz_class m = 0;
  for (int i = 0; i < q.degree(); ++i) m = std::max(m, mpz_class(abs(q.coeff(i))));
  mpz_class lc = abs(q.leading());
  mpz_class b;
  mpz_cdiv_q(b.get_mpz_t(), m.get_mpz_t(), lc.get_mpz_t());
  return b + 1;
}

}  // namespace

RootEnclosure enclose_root(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
  IntPolynomial q = squarefree_part(p);
  auto chain = std::make_shared<const SturmChain>(q);
  if (q.degree() < 1 || chain->count(lo, hi) != 1)
    throw Error(ErrorKind::NoDominantRoot, "interval does not isolate a single root of " + p.to_string());
  RootEnclosure r;
  r.sturm_ = chain;
  r.lo_ = lo;
  r.hi_ = hi;
  if (q.sign_at(hi) == 0) {
    r.lo_ = hi;
    return r;
  }
  r.sign_hi_ = q.sign_at(hi);
  while (q.sign_at(r.lo_) == 0) {
    mpq_class mid = (r.lo_ + r.hi_) / 2;
    if (chain->count(mid, r.hi_) == 1) r.lo_ = mid;
    else r.hi_ = mid;
    r.sign_hi_ = q.sign_at(r.hi_);
    if (r.sign_hi_ == 0) {
      r.lo_ = r.hi_;
      return r;
    }
  }
  return r;
}

RootEnclosure perron_root(const IntPolynomial& p, const mpq_class& width) {
  IntPolynomial q = squarefree_part(p);
  if (q.degree() < 1) throw Error(ErrorKind::NoDominantRoot, "constant polynomial has no root");
  SturmChain chain(q);
  mpq_class lo = 1;
  mpq_class hi = mpq_class(cauchy_bound(q));
  int v_lo = chain.sign_variations(lo);
  int v_hi = chain.sign_variations(hi);
  if (v_lo - v_hi == 0)
    throw Error(ErrorKind::NoDominantRoot, "no real root above 1 for " + p.to_string());
  while (v_lo - v_hi > 1) {
    mpq_class mid = (lo + hi) / 2;
    const int v_mid = chain.sign_variations(mid);
    if (v_mid - v_hi >= 1) {
      lo = mid;
      v_lo = v_mid;
    } else {
      hi = mid;
      v_hi = v_mid;
    }
  }
  RootEnclosure r = enclose_root(q, lo, hi);
  r.refine(width);
  return r;
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

namespace {

Ordering flip(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return o;
}

}  // namespace

Ordering compare_root(const RootEnclosure& a, const mpq_class& x) {
  if (a.exact()) {
    const int c = cmp(a.lo(), x);
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
  }
  if (x <= a.lo()) return Ordering::Greater;
  if (x >= a.hi()) return Ordering::Less;
  const int s = a.defining().sign_at(x);
  if (s == 0) return Ordering::Equal;
  return s == a.defining().sign_at(a.hi()) ? Ordering::Less : Ordering::Greater;
}

Ordering compare_roots(const RootEnclosure& a_in, const RootEnclosure& b_in) {
  RootEnclosure a = a_in;
  RootEnclosure b = b_in;
  bool gcd_checked = false;
  while (true) {
    if (a.exact()) return flip(compare_root(b, a.lo()));
    if (b.exact()) return compare_root(a, b.lo());
    if (a.hi() <= b.lo()) return Ordering::Less;
    if (b.hi() <= a.lo()) return Ordering::Greater;
    if (!gcd_checked) {
      gcd_checked = true;
      IntPolynomial g = gcd(a.defining(), b.defining());
      if (g.degree() >= 1) {
        const mpq_class L = std::max(a.lo(), b.lo());
        const mpq_class H = std::min(a.hi(), b.hi());
        SturmChain sg(g);
        int roots = sg.count(L, H);
        if (g.sign_at(H) == 0) --roots;
        if (roots > 0) return Ordering::Equal;
      }
    }
    a.bisect();
    b.bisect();
  }
}

}  // namespace hypsys
