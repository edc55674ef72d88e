#include "hypsys/suspension.hpp"

#include <cstdlib>
#include <string>

#include "hypsys/errors.hpp"

namespace hypsys {

int default_precision_bits() {
  if (const char* env = std::getenv("HYPSYS_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 16 && v <= 1 << 20) return static_cast<int>(v);
    throw Error(ErrorKind::Parse, std::string("HYPSYS_PRECISION must be an integer in [16, 2^20], got ") + env);
  }
  return 1024;
}

ThetaField::ThetaField(RootEnclosure theta, int precision_bits)
    : theta_(std::move(theta)), q_(theta_.defining()), precision_bits_(precision_bits) {
  if (q_.leading() != 1) throw Error(ErrorKind::InternalInconsistency, "Z[θ] needs a monic defining polynomial");
  if (theta_.lo() <= 0) throw Error(ErrorKind::OutOfRange, "θ must be positive");
}

IntPolynomial ThetaField::reduce(const IntPolynomial& a) const {
  if (a.degree() < q_.degree()) return a;
  return pseudo_remainder(a, q_);  // q is monic
}

IntPolynomial ThetaField::times_theta(const IntPolynomial& a) const { return reduce(a * IntPolynomial{0, 1}); }

int ThetaField::sign(const IntPolynomial& a) const {
  const IntPolynomial r = reduce(a);
  if (r.is_zero()) return 0;
  if (theta_.exact()) return r.sign_at(theta_.lo());
  bool zero_checked = false;
  const mpq_class ceiling = pow2_inv(precision_bits_);
  while (true) {
    // interval Horner on (lo, hi), 0 < lo
    mpq_class lo_sum = 0, hi_sum = 0, plo = 1, phi = 1;
    for (int j = 0; j <= r.degree(); ++j) {
      const mpz_class& c = r.coefficients()[j];
      if (c > 0) {
        lo_sum += c * plo;
        hi_sum += c * phi;
      } else if (c < 0) {
        lo_sum += c * phi;
        hi_sum += c * plo;
      }
      plo *= theta_.lo();
      phi *= theta_.hi();
    }
    if (lo_sum > 0) return 1;
    if (hi_sum < 0) return -1;
    if (!zero_checked) {
      const IntPolynomial g = gcd(r, q_);
      if (g.degree() >= 1 && SturmChain(g).count(theta_.lo(), theta_.hi()) > 0) return 0;
      zero_checked = true;
    }
    if (theta_.width() < ceiling)
      throw Error(ErrorKind::AmbiguousComparison,
                  "sign undecided at " + std::to_string(precision_bits_) + " bits");
    theta_.refine(theta_.width() / 65536);
  }
}

double ThetaField::approx(const IntPolynomial& a) const {
  const double t = theta_.approx();
  double v = 0;
  const auto& c = a.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + it->get_d();
  return v;
}

namespace {

struct RationalOps {
  using T = mpq_class;
  static int sign(const T& x) { return sgn(x); }
  static double approx(const T& x) { return x.get_d(); }
  static T zero() { return 0; }
};

struct ThetaOps {
  using T = IntPolynomial;
  const ThetaField* field;
  int sign(const T& x) const { return field->sign(x); }
  double approx(const T& x) const { return field->approx(x); }
  static T zero() { return {}; }
};

template <typename Ops>
HeightInterval height_interval_impl(const LabeledPermutation& pi, const std::vector<typename Ops::T>& tau,
                                    const Ops& ops) {
  using T = typename Ops::T;
  const int d = pi.size();
  if (static_cast<int>(tau.size()) != d) throw Error(ErrorKind::InvalidSize, "τ has the wrong length");
  HeightInterval out;
  // min over top partial sums, max over bottom partial sums, k = 1..d-1
  T top = Ops::zero(), bottom = Ops::zero(), min_top, max_bottom;
  for (int k = 0; k + 1 < d; ++k) {
    top = top + tau[pi.top[k] - 1];
    bottom = bottom + tau[pi.bottom[k] - 1];
    if (k == 0 || ops.sign(top - min_top) < 0) min_top = top;
    if (k == 0 || ops.sign(bottom - max_bottom) > 0) max_bottom = bottom;
  }
  T total = Ops::zero();
  for (const T& t : tau) total = total + t;
  if (pi.top.front() == pi.bottom.back()) {
    out.clause_iii_applies = true;
    out.clause_iii_holds = ops.sign(total - tau[pi.top.front() - 1]) < 0;
  }
  if (pi.top.back() == pi.bottom.front()) {
    out.clause_iv_applies = true;
    out.clause_iv_holds = ops.sign(total - tau[pi.bottom.front() - 1]) > 0;
  }
  out.lo = -ops.approx(min_top);
  out.hi = -ops.approx(max_bottom);
  out.nonempty = ops.sign(min_top - max_bottom) > 0 && out.clause_iii_holds && out.clause_iv_holds;
  return out;
}

template <typename Ops, typename State>
DynamicStep<State> step_impl(const State& s, Side side, const Ops& ops) {
  const LabeledPermutation& p = s.pi;
  const int a = side == Side::Right ? p.top.back() : p.top.front();
  const int b = side == Side::Right ? p.bottom.back() : p.bottom.front();
  const int sg = ops.sign(s.lengths[a - 1] - s.lengths[b - 1]);
  if (sg == 0)
    throw Error(ErrorKind::AmbiguousComparison,
                "tie between the lengths of " + std::to_string(a) + " and " + std::to_string(b) + " at " +
                    p.to_string());
  Move m;
  if (side == Side::Right)
    m = sg > 0 ? Move::RightT : Move::RightB;
  else
    m = sg > 0 ? Move::LeftT : Move::LeftB;
  MoveResult r = rauzy_move(p, m);
  DynamicStep<State> out{State{std::move(r.result), s.lengths}, m, r.winner, r.loser};
  out.state.lengths[r.winner - 1] = out.state.lengths[r.winner - 1] - out.state.lengths[r.loser - 1];
  return out;
}

}  // namespace

HeightInterval height_interval(const LabeledPermutation& pi, const std::vector<mpq_class>& tau) {
  return height_interval_impl(pi, tau, RationalOps{});
}

HeightInterval height_interval(const LabeledPermutation& pi, const std::vector<IntPolynomial>& tau,
                               const ThetaField& field) {
  return height_interval_impl(pi, tau, ThetaOps{&field});
}

bool is_weak_suspension(const LabeledPermutation& pi, const std::vector<mpq_class>& tau, const mpq_class& h) {
  const int d = pi.size();
  mpq_class top = h, bottom = h, total = 0;
  for (int k = 0; k + 1 < d; ++k) {
    top += tau[pi.top[k] - 1];
    bottom += tau[pi.bottom[k] - 1];
    if (top <= 0 || bottom >= 0) return false;
  }
  for (const mpq_class& t : tau) total += t;
  if (pi.top.front() == pi.bottom.back() && total - tau[pi.top.front() - 1] >= 0) return false;
  if (pi.top.back() == pi.bottom.front() && total - tau[pi.bottom.front() - 1] <= 0) return false;
  return true;
}

EigenData eigen_data(const IntMatrix& v, const LabeledPermutation& pi) {
  const int n = v.size();
  if (pi.size() != n) throw Error(ErrorKind::InvalidSize, "matrix and permutation sizes differ");
  if (!is_primitive(v)) throw Error(ErrorKind::NotPrimitive, "eigen-data needs a primitive matrix");
  const IntPolynomial chi = charpoly_exact(v);
  EigenData out;
  out.theta = perron_root(chi);
  const ThetaField field(out.theta);

  // adj(X·I - V) = Σ_j X^j N_j with N_{n-1} = I, N_{j-1} = V·N_j + c_j·I
  std::vector<IntMatrix> N(n);
  N[n - 1] = IntMatrix::identity(n);
  for (int j = n - 1; j >= 1; --j) {
    N[j - 1] = v * N[j];
    for (int i = 0; i < n; ++i) N[j - 1].at(i, i) += chi.coeff(j);
  }
  // column c of adj(x·I - V) at x = θ (forward) or x = θ^{-1} scaled by θ^{n-1} (reversed)
  auto column = [&](int c, bool reversed) {
    std::vector<IntPolynomial> vec(n);
    for (int r = 0; r < n; ++r) {
      std::vector<mpz_class> coeffs(n);
      for (int j = 0; j < n; ++j) coeffs[reversed ? n - 1 - j : j] = N[j].at(r, c);
      vec[r] = field.reduce(IntPolynomial(std::move(coeffs)));
    }
    return vec;
  };
  auto nonzero = [&](const std::vector<IntPolynomial>& vec) {
    for (const auto& x : vec)
      if (field.sign(x) != 0) return true;
    return false;
  };
  for (int c = 0; c < n && out.lambda.empty(); ++c) {
    auto vec = column(c, false);
    if (nonzero(vec)) out.lambda = std::move(vec);
  }
  for (int c = 0; c < n && out.tau.empty(); ++c) {
    auto vec = column(c, true);
    if (nonzero(vec)) out.tau = std::move(vec);
  }
  if (out.lambda.empty() || out.tau.empty())
    throw Error(ErrorKind::InternalInconsistency, "adjugate has no nonzero column");

  const int s0 = field.sign(out.lambda[0]);
  for (auto& x : out.lambda) {
    if (s0 < 0) x = -x;
    if (field.sign(x) <= 0) throw Error(ErrorKind::ConstructionViolation, "Perron eigenvector is not positive");
  }
  // V·λ = θ·λ and θ·(V·τ) = τ
  for (int r = 0; r < n; ++r) {
    IntPolynomial vl, vt;
    for (int c = 0; c < n; ++c) {
      if (v.at(r, c) == 0) continue;
      vl += out.lambda[c] * v.at(r, c);
      vt += out.tau[c] * v.at(r, c);
    }
    if (field.sign(vl - field.times_theta(out.lambda[r])) != 0 ||
        field.sign(field.times_theta(vt) - out.tau[r]) != 0)
      throw Error(ErrorKind::InternalInconsistency, "eigenvector check failed");
  }

  out.heights = height_interval(pi, out.tau, field);
  if (!out.heights.nonempty) {
    for (auto& x : out.tau) x = -x;
    out.tau_flipped = true;
    out.heights = height_interval(pi, out.tau, field);
    if (!out.heights.nonempty)
      throw Error(ErrorKind::ConstructionViolation,
                  "neither τ nor -τ is a weak suspension datum for " + pi.to_string());
  }

  double lsum = 0, tsum = 0;
  for (const auto& x : out.lambda) {
    out.lambda_approx.push_back(field.approx(x));
    lsum += out.lambda_approx.back();
  }
  for (const auto& x : out.tau) {
    out.tau_approx.push_back(field.approx(x));
    tsum += std::abs(out.tau_approx.back());
  }
  for (double& x : out.lambda_approx) x /= lsum;
  for (double& x : out.tau_approx) x /= tsum;
  return out;
}

DynamicStep<IetState> rauzy_step_dynamic(const IetState& s, Side side, const ThetaField& field) {
  return step_impl(s, side, ThetaOps{&field});
}

DynamicStep<RationalIetState> rauzy_step_dynamic(const RationalIetState& s, Side side) {
  return step_impl(s, side, RationalOps{});
}

}  // namespace hypsys
