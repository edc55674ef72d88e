#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "hypsys/polynomial.hpp"

namespace hypsys {

/// Sturm chain of a square-free polynomial.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& squarefree);
  /// Number of distinct real roots in (a, b], a < b.
  int count(const mpq_class& a, const mpq_class& b) const;
  int sign_variations(const mpq_class& x) const;
  const IntPolynomial& base() const { return chain_.front(); }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Certified isolating interval for the largest real root of a polynomial.
///
/// Either `exact()` and the root equals lo == hi, or the root lies in the open
/// interval (lo, hi), it is the only root of `defining()` there, and
/// defining(lo), defining(hi) are nonzero with opposite signs.
class RootEnclosure {
 public:
  RootEnclosure() = default;

  const IntPolynomial& defining() const { return sturm_->base(); }
  const mpq_class& lo() const { return lo_; }
  const mpq_class& hi() const { return hi_; }
  bool exact() const { return lo_ == hi_; }
  mpq_class width() const { return hi_ - lo_; }
  const SturmChain& sturm() const { return *sturm_; }

  /// Bisects until width < `width`.
  void refine(const mpq_class& width);
  /// Bisects once.
  void bisect();
  /// Rounded decimal with `digits` fractional digits, refining as needed.
  std::string decimal(int digits) const;
  double approx() const;

 private:
  friend RootEnclosure perron_root(const IntPolynomial&, const mpq_class&);
  friend RootEnclosure enclose_root(const IntPolynomial&, const mpq_class&, const mpq_class&);
  std::shared_ptr<const SturmChain> sturm_;
  mpq_class lo_, hi_;
  int sign_hi_ = 0;
};

/// 2^-bits as a rational.
mpq_class pow2_inv(int bits);
/// 10^-digits as a rational.
mpq_class pow10_inv(int digits);

/// Default widths: 1e-30 for comparisons, 1e-12 for display.
const mpq_class& dedup_width();
const mpq_class& display_width();

/// Largest real root of `p`, which must exceed 1. Throws NoDominantRoot
/// otherwise.
RootEnclosure perron_root(const IntPolynomial& p, const mpq_class& width = dedup_width());

/// The unique root of `p` in (lo, hi]; throws when there is not exactly one.
RootEnclosure enclose_root(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi);

enum class Ordering { Less, Equal, Greater };
std::string to_string(Ordering o);

/// Exact comparison of two certified roots. Refines copies of the inputs.
Ordering compare_roots(const RootEnclosure& a, const RootEnclosure& b);
/// Compares a root with a rational number.
Ordering compare_root(const RootEnclosure& a, const mpq_class& x);

}  // namespace hypsys
