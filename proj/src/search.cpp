#include "hypsys/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "hypsys/errors.hpp"
#include "hypsys/families.hpp"

namespace hypsys {

std::string stratum_name(int n) {
  const int g = genus_of(n);
  if (n % 2 == 0) return "H(" + std::to_string(2 * g - 2) + ")";
  return "H(" + std::to_string(g - 1) + "," + std::to_string(g - 1) + ")";
}

int genus_of(int n) { return n % 2 == 0 ? n / 2 : (n - 1) / 2; }

// ---------------------------------------------------------------------------
// charpoly modulo a Mersenne prime

namespace {

using i128 = __int128;
using u64 = std::uint64_t;
constexpr u64 kPrime = (u64{1} << 61) - 1;

u64 mulmod(u64 a, u64 b) {
  const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  u64 r = static_cast<u64>(z & kPrime) + static_cast<u64>(z >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}
u64 addmod(u64 a, u64 b) {
  u64 r = a + b;
  if (r >= kPrime) r -= kPrime;
  return r;
}
u64 submod(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }
u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a) { return powmod(a, kPrime - 2); }

// Ascending coefficients of det(X·I - A) mod p, A given mod p row-major.
std::vector<u64> charpoly_mod(std::vector<u64> a, int n) {
  auto at = [&](int i, int j) -> u64& { return a[static_cast<std::size_t>(i) * n + j]; };
  // Hessenberg form by similarity
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (at(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(at(r, piv), at(r, j + 1));
    }
    const u64 inv = invmod(at(j + 1, j));
    for (int i = j + 2; i < n; ++i) {
      if (at(i, j) == 0) continue;
      const u64 u = mulmod(at(i, j), inv);
      for (int c = 0; c < n; ++c) at(i, c) = submod(at(i, c), mulmod(u, at(j + 1, c)));
      for (int r = 0; r < n; ++r) at(r, j + 1) = addmod(at(r, j + 1), mulmod(u, at(r, i)));
    }
  }
  // p_m = (X - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    for (int d = 0; d < m; ++d) {
      cur[d + 1] = addmod(cur[d + 1], p[m - 1][d]);
      cur[d] = submod(cur[d], mulmod(at(m - 1, m - 1), p[m - 1][d]));
    }
    u64 prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod = mulmod(prod, at(i, i - 1));
      if (prod == 0) break;
      const u64 coef = mulmod(at(i - 1, m - 1), prod);
      if (coef == 0) continue;
      for (int d = 0; d < i; ++d) cur[d] = submod(cur[d], mulmod(coef, p[i - 1][d]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

// Bound on Σ C(n,j) U^j = (1+U)^n below p/2.
bool lift_is_valid(int n, double spectral_bound) {
  return n * std::log2(1.0 + spectral_bound) < 59.0;
}

std::vector<std::int64_t> charpoly_fast_i64(const std::vector<std::int64_t>& m, int n) {
  std::vector<u64> a(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::int64_t v = m[i] % static_cast<std::int64_t>(kPrime);
    a[i] = static_cast<u64>(v < 0 ? v + static_cast<std::int64_t>(kPrime) : v);
  }
  const std::vector<u64> c = charpoly_mod(std::move(a), n);
  std::vector<std::int64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    out[i] = c[i] > kPrime / 2 ? static_cast<std::int64_t>(c[i]) - static_cast<std::int64_t>(kPrime)
                               : static_cast<std::int64_t>(c[i]);
  return out;
}

IntPolynomial to_poly(const std::vector<std::int64_t>& c) {
  std::vector<mpz_class> v;
  v.reserve(c.size());
  for (std::int64_t x : c) v.emplace_back(static_cast<long>(x));
  return IntPolynomial(std::move(v));
}

}  // namespace

IntPolynomial charpoly_fast(const IntMatrix& m, double spectral_bound) {
  const int n = m.size();
  if (!lift_is_valid(n, spectral_bound)) return charpoly_exact(m);
  std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!m.at(i, j).fits_slong_p()) return charpoly_exact(m);
      a[static_cast<std::size_t>(i) * n + j] = m.at(i, j).get_si();
    }
  return to_poly(charpoly_fast_i64(a, n));
}

// ---------------------------------------------------------------------------
// search machinery

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint8_t kUnreachable = 255;
constexpr std::uint8_t kAtTarget = 2;

struct Step {
  std::uint8_t w;  // 0-based winner
  std::uint8_t l;  // 0-based loser
};

/// Reverse adjacency of D_n, shared by all targets.
struct ReverseGraph {
  std::vector<std::uint32_t> offset;
  std::vector<std::uint32_t> from;
  std::vector<std::uint8_t> move;  // 0 = t, 1 = b

  explicit ReverseGraph(const RauzyDiagram& d) {
    const std::size_t N = d.size();
    std::vector<std::uint32_t> indeg(N + 1, 0);
    for (std::uint32_t v = 0; v < N; ++v)
      for (Move m : {Move::RightT, Move::RightB}) ++indeg[d.edge(v, m).target + 1];
    offset.assign(N + 1, 0);
    for (std::size_t v = 0; v < N; ++v) offset[v + 1] = offset[v] + indeg[v + 1];
    from.resize(2 * N);
    move.resize(2 * N);
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (std::uint32_t v = 0; v < N; ++v)
      for (Move m : {Move::RightT, Move::RightB}) {
        const std::uint32_t t = d.edge(v, m).target;
        from[fill[t]] = v;
        move[fill[t]] = m == Move::RightT ? 0 : 1;
        ++fill[t];
      }
  }
};

/// Everything that depends on the start vertex π_n.t^k.
struct Target {
  int k = 0;
  std::uint32_t start = 0;
  std::uint32_t target = 0;
  std::vector<std::uint8_t> next;  // first move of the shortest completion
  std::vector<int> perm;           // (P x)_α = x_{perm[α]}

  Target(const RauzyDiagram& d, const ReverseGraph& rg, int k_) : k(k_) {
    const int n = d.n();
    start = d.index_of(central_loop_vertex(n, k));
    target = d.symmetric_of(start);
    next.assign(d.size(), kUnreachable);
    next[target] = kAtTarget;
    std::deque<std::uint32_t> queue{target};
    while (!queue.empty()) {
      const std::uint32_t v = queue.front();
      queue.pop_front();
      for (std::uint32_t i = rg.offset[v]; i < rg.offset[v + 1]; ++i) {
        const std::uint32_t u = rg.from[i];
        if (u == 0 || next[u] != kUnreachable) continue;  // never through π_n
        next[u] = rg.move[i];
        queue.push_back(u);
      }
    }
    const LabeledPermutation s_end = symmetric(d.vertex(target));
    const LabeledPermutation st = d.vertex(start);
    perm.assign(n, 0);
    for (int pos = 0; pos < n; ++pos) perm[s_end.top[pos] - 1] = st.top[pos] - 1;
  }
};

/// Rational bound num/den with small integers, plus its double value.
struct Bound {
  mpq_class q;
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool small = false;
  double d = 0;

  explicit Bound(const mpq_class& value) { set(value); }
  void set(const mpq_class& value) {
    q = value;
    d = value.get_d();
    small = q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && abs(q.get_num()) < (mpz_class(1) << 52) &&
            q.get_den() < (mpz_class(1) << 52);
    if (small) {
      num = q.get_num().get_si();
      den = q.get_den().get_si();
    }
  }
};

enum class Verdict { Below, AtLeast };

class Searcher {
 public:
  using Sink = std::function<void(const Searcher&, const std::vector<std::int64_t>& charpoly)>;

  Searcher(const RauzyDiagram& d, const Target& t, const SearchConfig& cfg, Bound& bound, std::mutex* bound_mu,
           Clock::time_point deadline, bool has_deadline, std::atomic<bool>& abort, Sink sink)
      : d_(d), t_(t), cfg_(cfg), bound_(bound), bound_mu_(bound_mu), deadline_(deadline),
        has_deadline_(has_deadline), abort_(abort), sink_(std::move(sink)), n_(d.n()) {
    max_depth_ = cfg.max_depth > 0 ? cfg.max_depth : 6 * (n_ - 1);
    xs_.assign(max_depth_ + 2, std::vector<double>(n_, 1.0));
    y_.resize(n_);
  }

  void run() {
    if (t_.next[t_.start] == kUnreachable) return;
    dfs(t_.start, 0);
  }

  const SearchStats& stats() const { return stats_; }
  int k() const { return t_.k; }
  const std::vector<Move>& word() const { return moves_; }

 private:
  Bound current_bound() const {
    if (bound_mu_) {
      std::lock_guard<std::mutex> lock(*bound_mu_);
      return bound_;
    }
    return bound_;
  }

  void dfs(std::uint32_t v, int depth) {
    ++stats_.nodes;
    if ((stats_.nodes & 1023u) == 0 && has_deadline_ && Clock::now() > deadline_) {
      stats_.out_of_time = true;
      abort_ = true;
    }
    if (abort_) return;
    if (v == t_.target && depth > 0) {
      emit();
      if (!cfg_.continue_past_target) return;
    }
    for (Move m : {Move::RightT, Move::RightB}) {
      if (depth == 0 && m == Move::RightT) continue;  // first move is b
      const RauzyDiagram::Edge& e = d_.edge(v, m);
      const std::uint32_t u = e.target;
      if (u == 0) continue;
      if (t_.next[u] == kUnreachable) {
        ++stats_.pruned;
        continue;
      }
      steps_.push_back(Step{static_cast<std::uint8_t>(e.winner - 1), static_cast<std::uint8_t>(e.loser - 1)});
      moves_.push_back(m);
      xs_[depth + 1] = xs_[depth];
      const Verdict verdict = lower_bound_verdict(u, xs_[depth + 1]);
      if (verdict == Verdict::AtLeast) {
        ++stats_.pruned;
      } else if (depth + 1 > max_depth_) {
        stats_.depth_limited = true;
      } else {
        dfs(u, depth + 1);
      }
      steps_.pop_back();
      moves_.pop_back();
      if (abort_) return;
    }
  }

  // Steps of prefix plus shortest completion from u.
  void collect(std::uint32_t u) {
    all_ = steps_;
    while (t_.next[u] != kAtTarget) {
      const Move m = t_.next[u] == 0 ? Move::RightT : Move::RightB;
      const RauzyDiagram::Edge& e = d_.edge(u, m);
      all_.push_back(Step{static_cast<std::uint8_t>(e.winner - 1), static_cast<std::uint8_t>(e.loser - 1)});
      u = e.target;
    }
  }

  template <typename T>
  void apply(const std::vector<T>& x, std::vector<T>& y) const {
    for (int a = 0; a < n_; ++a) y[a] = x[t_.perm[a]];
    for (auto it = all_.rbegin(); it != all_.rend(); ++it) y[it->w] += y[it->l];
  }

  bool apply_checked(const std::vector<i128>& x, std::vector<i128>& y) const {
    for (int a = 0; a < n_; ++a) y[a] = x[t_.perm[a]];
    for (auto it = all_.rbegin(); it != all_.rend(); ++it)
      if (__builtin_add_overflow(y[it->w], y[it->l], &y[it->w])) return false;
    return true;
  }

  // θ(Ṽ(prefix)·Ṽ(completion from u)·P) against the bound.
  Verdict lower_bound_verdict(std::uint32_t u, std::vector<double>& x) {
    collect(u);
    const Bound b = current_bound();
    if (b.small && min_column_sum_at_least(b)) return Verdict::AtLeast;
    for (double v : x)
      if (!(v > 0) || !std::isfinite(v)) {
        std::fill(x.begin(), x.end(), 1.0);
        break;
      }
    for (int iter = 0; iter < 400; ++iter) {
      apply(x, y_);
      double lo = HUGE_VAL, hi = 0;
      for (int i = 0; i < n_; ++i) {
        const double r = y_[i] / x[i];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      const bool clear = lo > b.d * (1 + 1e-12) || hi < b.d * (1 - 1e-12);
      if (clear && b.small) {
        if (auto v = certify(x, b)) return *v;
      }
      double mx = 0;
      for (int i = 0; i < n_; ++i) {
        x[i] = x[i] + y_[i];
        mx = std::max(mx, x[i]);
      }
      for (int i = 0; i < n_; ++i) x[i] = std::max(x[i] / mx, 1e-300);
      if (clear && !b.small) break;
      if (iter > 60 && hi - lo < 1e-13 * b.d) break;  // converged onto the bound
    }
    return exact_verdict(b);
  }

  // δ(M) >= bound implies θ(M) >= bound. Column sums are 1ᵀ·Ṽ·P.
  bool min_column_sum_at_least(const Bound& b) const {
    std::vector<i128> z(n_, 1);
    for (const Step& s : all_)
      if (__builtin_add_overflow(z[s.l], z[s.w], &z[s.l])) return false;
    for (int i = 0; i < n_; ++i) {
      i128 lhs;
      if (__builtin_mul_overflow(z[i], static_cast<i128>(b.den), &lhs)) continue;
      if (lhs < static_cast<i128>(b.num)) return false;
    }
    return true;
  }

  std::optional<Verdict> certify(const std::vector<double>& x, const Bound& b) {
    double mx = 0;
    for (double v : x) mx = std::max(mx, v);
    std::vector<i128> X(n_), Y(n_);
    for (int i = 0; i < n_; ++i) X[i] = std::max<i128>(1, static_cast<i128>(std::llround(x[i] / mx * 1073741824.0)));
    if (!apply_checked(X, Y)) return std::nullopt;
    bool all_ge = true, all_lt = true;
    for (int i = 0; i < n_; ++i) {
      i128 lhs, rhs;
      if (__builtin_mul_overflow(Y[i], static_cast<i128>(b.den), &lhs) ||
          __builtin_mul_overflow(X[i], static_cast<i128>(b.num), &rhs))
        return std::nullopt;
      if (lhs < rhs) all_ge = false;
      if (lhs >= rhs) all_lt = false;
    }
    if (all_ge) return Verdict::AtLeast;  // min ratio >= bound
    if (all_lt) return Verdict::Below;    // max ratio < bound
    return std::nullopt;
  }

  IntMatrix build_matrix(const std::vector<Step>& steps) const {
    IntMatrix vt = IntMatrix::identity(n_);
    for (const Step& s : steps) vt.add_column(s.w, s.l);
    IntMatrix m(n_);
    for (int a = 0; a < n_; ++a)
      for (int i = 0; i < n_; ++i) m.at(i, t_.perm[a]) = vt.at(i, a);
    return m;
  }

  Verdict exact_verdict(const Bound& b) {
    ++stats_.exact_fallbacks;
    const IntPolynomial chi = charpoly_exact(build_matrix(all_));
    const IntPolynomial q = squarefree_part(chi);
    if (q.sign_at(b.q) == 0) return Verdict::AtLeast;
    mpz_class cb = 0;
    for (int i = 0; i < q.degree(); ++i) cb = std::max(cb, mpz_class(abs(q.coeff(i))));
    mpq_class top = mpq_class(cb / abs(q.leading()) + 2);
    if (top <= b.q) return Verdict::Below;
    return SturmChain(q).count(b.q, top) > 0 ? Verdict::AtLeast : Verdict::Below;
  }

  void emit() {
    std::vector<std::int64_t> a(static_cast<std::size_t>(n_) * n_, 0);
    {
      // Ṽ in int64 with overflow checks, then columns permuted by P
      std::vector<std::int64_t> vt(static_cast<std::size_t>(n_) * n_, 0);
      for (int i = 0; i < n_; ++i) vt[static_cast<std::size_t>(i) * n_ + i] = 1;
      for (const Step& s : steps_)
        for (int i = 0; i < n_; ++i) {
          std::int64_t& dst = vt[static_cast<std::size_t>(i) * n_ + s.l];
          if (__builtin_add_overflow(dst, vt[static_cast<std::size_t>(i) * n_ + s.w], &dst))
            throw Error(ErrorKind::InternalInconsistency, "path matrix entry overflow");
        }
      for (int a_col = 0; a_col < n_; ++a_col)
        for (int i = 0; i < n_; ++i)
          a[static_cast<std::size_t>(i) * n_ + t_.perm[a_col]] = vt[static_cast<std::size_t>(i) * n_ + a_col];
    }
    if (!primitive(a)) {
      ++stats_.non_primitive;
      return;
    }
    const Bound b = current_bound();
    std::vector<std::int64_t> chi;
    if (lift_is_valid(n_, b.d)) {
      chi = charpoly_fast_i64(a, n_);
    } else {
      IntMatrix m(n_);
      for (std::size_t i = 0; i < a.size(); ++i) m.at(static_cast<int>(i / n_), static_cast<int>(i % n_)) = static_cast<long>(a[i]);
      const IntPolynomial p = charpoly_exact(m);
      for (int i = 0; i <= p.degree(); ++i) {
        if (!p.coeff(i).fits_slong_p()) throw Error(ErrorKind::InternalInconsistency, "charpoly coefficient overflow");
        chi.push_back(p.coeff(i).get_si());
      }
    }
    ++stats_.emitted;
    sink_(*this, chi);
  }

  bool primitive(const std::vector<std::int64_t>& a) const {
    if (n_ > 64) {
      IntMatrix m(n_);
      for (std::size_t i = 0; i < a.size(); ++i) m.at(static_cast<int>(i / n_), static_cast<int>(i % n_)) = static_cast<long>(a[i]);
      return is_primitive(m);
    }
    std::vector<u64> s(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (a[static_cast<std::size_t>(i) * n_ + j] != 0) s[i] |= u64{1} << j;
    auto mul = [&](const std::vector<u64>& x, const std::vector<u64>& y) {
      std::vector<u64> c(n_, 0);
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k)
          if (x[i] >> k & 1u) c[i] |= y[k];
      return c;
    };
    unsigned e = static_cast<unsigned>((n_ - 1) * (n_ - 1) + 1);
    std::vector<u64> result, base = s;
    bool have = false;
    while (e) {
      if (e & 1u) {
        result = have ? mul(result, base) : base;
        have = true;
      }
      e >>= 1;
      if (e) base = mul(base, base);
    }
    const u64 full = n_ == 64 ? ~u64{0} : (u64{1} << n_) - 1;
    for (int i = 0; i < n_; ++i)
      if (result[i] != full) return false;
    return true;
  }

  const RauzyDiagram& d_;
  const Target& t_;
  const SearchConfig& cfg_;
  Bound& bound_;
  std::mutex* bound_mu_;
  Clock::time_point deadline_;
  bool has_deadline_;
  std::atomic<bool>& abort_;
  Sink sink_;
  int n_;
  int max_depth_;
  SearchStats stats_;
  std::vector<Step> steps_;
  std::vector<Move> moves_;
  std::vector<Step> all_;
  std::vector<std::vector<double>> xs_;
  std::vector<double> y_;
};

void merge(SearchStats& into, const SearchStats& s) {
  into.nodes += s.nodes;
  into.pruned += s.pruned;
  into.emitted += s.emitted;
  into.non_primitive += s.non_primitive;
  into.exact_fallbacks += s.exact_fallbacks;
  into.depth_limited |= s.depth_limited;
  into.out_of_time |= s.out_of_time;
}

void validate(const SearchConfig& cfg) {
  if (cfg.n < 4) throw Error(ErrorKind::InvalidSize, "search needs n >= 4");
  if (cfg.bound <= 1) throw Error(ErrorKind::OutOfRange, "bound must exceed 1");
  if (cfg.max_depth < 0) throw Error(ErrorKind::OutOfRange, "max_depth must be >= 0");
}

/// Runs the DFS for every start k = K_n..1 on `threads` workers.
SearchStats run_search(const SearchConfig& cfg, Bound& bound, std::mutex* bound_mu,
                       const std::function<void(int k, const std::vector<Move>&, const std::vector<std::int64_t>&)>& sink) {
  validate(cfg);
  const auto t0 = Clock::now();
  const RauzyDiagram d = RauzyDiagram::build(cfg.n);
  const ReverseGraph rg(d);
  std::vector<int> ks;
  for (int k = K_of(cfg.n); k >= 1; --k) ks.push_back(k);

  const bool has_deadline = cfg.time_budget > 0;
  const auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_budget));
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> next{0};
  std::mutex out_mu;
  SearchStats total;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      while (true) {
        const std::size_t i = next++;
        if (i >= ks.size() || abort) break;
        const Target t(d, rg, ks[i]);
        Searcher s(d, t, cfg, bound, bound_mu, deadline, has_deadline, abort,
                   [&](const Searcher& self, const std::vector<std::int64_t>& chi) {
                     std::lock_guard<std::mutex> lock(out_mu);
                     sink(self.k(), self.word(), chi);
                   });
        s.run();
        std::lock_guard<std::mutex> lock(out_mu);
        merge(total, s.stats());
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(out_mu);
      if (!failure) failure = std::current_exception();
      abort = true;
    }
  };
  const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(ks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  total.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return total;
}

struct Representative {
  int k = 0;
  std::vector<Move> word;
  std::uint64_t count = 0;

  void offer(int k_, const std::vector<Move>& w) {
    ++count;
    const auto key = std::make_tuple(w.size(), k_, format_word(w));
    if (count == 1 || key < std::make_tuple(word.size(), k, format_word(word))) {
      k = k_;
      word = w;
    }
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::int64_t x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

bool poly_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coefficients() < b.coefficients();
}

IntPolynomial times_x_plus_1(const IntPolynomial& p) { return p * IntPolynomial{1, 1}; }

mpq_class dyadic_above(const mpq_class& x, int bits) {
  mpz_class scaled;
  mpq_class s = x * mpq_class(mpz_class(1) << bits);
  mpz_cdiv_q(scaled.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return mpq_class(scaled + 1, mpz_class(1) << bits);
}

}  // namespace

SearchStats enumerate_admissible(const SearchConfig& cfg) {
  Bound bound(cfg.bound);
  return run_search(cfg, bound, nullptr, [&](int k, const std::vector<Move>& w, const std::vector<std::int64_t>& chi) {
    if (cfg.on_emit) cfg.on_emit(Emission{k, w, to_poly(chi)});
  });
}

SpectrumResult spectrum(const SearchConfig& cfg) {
  Bound bound(cfg.bound);
  std::unordered_map<std::vector<std::int64_t>, Representative, VecHash> classes;
  SpectrumResult result;
  result.n = cfg.n;
  result.symmetric_only = cfg.bound > 2;
  result.stats = run_search(cfg, bound, nullptr, [&](int k, const std::vector<Move>& w, const std::vector<std::int64_t>& chi) {
    classes[chi].offer(k, w);
    if (cfg.on_emit) cfg.on_emit(Emission{k, w, to_poly(chi)});
  });

  struct Item {
    IntPolynomial chi;
    RootEnclosure root;
    const Representative* rep;
  };
  std::vector<Item> items;
  items.reserve(classes.size());
  for (const auto& [chi, rep] : classes) {
    IntPolynomial p = to_poly(chi);
    RootEnclosure r = perron_root(p);
    items.push_back(Item{std::move(p), std::move(r), &rep});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    const Ordering o = compare_roots(a.root, b.root);
    if (o != Ordering::Equal) return o == Ordering::Less;
    return poly_less(a.chi, b.chi);
  });
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i + 1;
    while (j < items.size() && compare_roots(items[i].root, items[j].root) == Ordering::Equal) ++j;
    SpectrumEntry e;
    const Item* best = &items[i];
    for (std::size_t t = i; t < j; ++t) {
      e.class_charpolys.push_back(items[t].chi);
      e.path_count += items[t].rep->count;
      const auto key = [](const Item* it) {
        return std::make_tuple(it->rep->word.size(), it->rep->k, format_word(it->rep->word));
      };
      if (key(&items[t]) < key(best)) best = &items[t];
    }
    e.root = best->root;
    e.charpoly = best->chi;
    e.polynomial = times_x_plus_1(best->chi);
    e.k = best->rep->k;
    e.word = best->rep->word;
    result.entries.push_back(std::move(e));
    i = j;
  }
  return result;
}

namespace {

SystoleResult minimum_search(const SearchConfig& cfg) {
  Bound bound(cfg.bound);
  std::mutex bound_mu;
  std::optional<RootEnclosure> best;
  std::map<std::string, std::pair<IntPolynomial, Representative>> at_min;

  auto sink = [&](int k, const std::vector<Move>& w, const std::vector<std::int64_t>& chi) {
    IntPolynomial p = to_poly(chi);
    RootEnclosure r = perron_root(p);
    if (compare_root(r, bound.q) != Ordering::Less) return;
    const Ordering o = best ? compare_roots(r, *best) : Ordering::Less;
    if (o == Ordering::Greater) return;
    if (o == Ordering::Less) {
      best = r;
      at_min.clear();
      std::lock_guard<std::mutex> lock(bound_mu);
      bound.set(std::min(bound.q, dyadic_above(r.hi(), 40)));
    }
    auto& slot = at_min[p.ascending_string()];
    slot.first = p;
    slot.second.offer(k, w);
  };
  SystoleResult out;
  out.stats = run_search(cfg, bound, &bound_mu, sink);
  if (!best) {
    if (!out.stats.complete())
      throw Error(ErrorKind::Budget, "search stopped before finding any admissible path");
    throw Error(ErrorKind::InternalInconsistency, "no admissible path below the bound");
  }
  const std::pair<IntPolynomial, Representative>* pick = nullptr;
  for (const auto& [key, slot] : at_min) {
    out.entry.class_charpolys.push_back(slot.first);
    out.entry.path_count += slot.second.count;
    if (!pick || std::make_tuple(slot.second.word.size(), slot.second.k, format_word(slot.second.word)) <
                     std::make_tuple(pick->second.word.size(), pick->second.k, format_word(pick->second.word)))
      pick = &slot;
  }
  std::sort(out.entry.class_charpolys.begin(), out.entry.class_charpolys.end(), poly_less);
  out.entry.root = *best;
  out.entry.charpoly = pick->first;
  out.entry.polynomial = times_x_plus_1(pick->first);
  out.entry.k = pick->second.k;
  out.entry.word = pick->second.word;
  out.minimum_classes = at_min.size();
  return out;
}

}  // namespace

SystoleResult systole(int n, const SearchConfig& base) {
  SearchConfig cfg = base;
  cfg.n = n;
  cfg.on_emit = nullptr;
  SystoleResult r = minimum_search(cfg);
  if (!r.stats.complete()) return r;
  const RootEnclosure expected = perron_root(systole_polynomial(n));
  if (compare_roots(r.entry.root, expected) != Ordering::Equal)
    throw Error(ErrorKind::InternalInconsistency, "census minimum differs from the closed-form systole for n = " +
                                                      std::to_string(n));
  return r;
}

SystoleResult second_length(int n, const SearchConfig& base) {
  const IntPolynomial predicted_poly = second_polynomial(n);  // range check
  const RootEnclosure predicted = perron_root(family_P_nk(n, K_of(n) - 1));
  SearchConfig cfg = base;
  cfg.n = n;
  cfg.bound = dyadic_above(predicted.hi(), 30);
  SpectrumResult sp = spectrum(cfg);
  SystoleResult out;
  out.stats = sp.stats;
  if (sp.entries.size() < 2) {
    if (!sp.stats.complete())
      throw Error(ErrorKind::Budget, "search stopped before two distinct values were found");
    throw Error(ErrorKind::InternalInconsistency, "fewer than two distinct values below the predicted second value");
  }
  out.entry = sp.entries[1];
  out.minimum_classes = out.entry.class_charpolys.size();
  if (compare_roots(out.entry.root, predicted) != Ordering::Equal ||
      compare_roots(out.entry.root, perron_root(predicted_poly)) != Ordering::Equal)
    throw Error(ErrorKind::InternalInconsistency, "second value differs from the closed form for n = " + std::to_string(n));
  return out;
}

std::vector<CensusRow> census_table(int g_min, int g_max, const SearchConfig& base) {
  if (g_min < 2 || g_max < g_min) throw Error(ErrorKind::OutOfRange, "table needs 2 <= g_min <= g_max");
  std::vector<CensusRow> rows;
  for (int g = g_min; g <= g_max; ++g) {
    SearchConfig cfg = base;
    cfg.n = 2 * g;
    cfg.bound = 2;
    const SpectrumResult sp = spectrum(cfg);
    rows.push_back(CensusRow{g, cfg.n, sp.entries.size(), sp.stats.complete(), sp.stats.seconds});
  }
  return rows;
}

}  // namespace hypsys
