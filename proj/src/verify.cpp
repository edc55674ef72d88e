#include "hypsys/verify.hpp"

#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "hypsys/diagram.hpp"
#include "hypsys/errors.hpp"
#include "hypsys/families.hpp"
#include "hypsys/matrix.hpp"
#include "hypsys/roots.hpp"
#include "hypsys/rome.hpp"
#include "hypsys/zrl.hpp"

namespace hypsys {

std::size_t VerifyReport::failures() const {
  std::size_t f = 0;
  for (const auto& c : checks) f += !c.pass;
  return f;
}

std::size_t VerifyReport::failures(const std::string& group) const {
  std::size_t f = 0;
  for (const auto& c : checks) f += c.group == group && !c.pass;
  return f;
}

std::size_t VerifyReport::count(const std::string& group) const {
  std::size_t f = 0;
  for (const auto& c : checks) f += c.group == group;
  return f;
}

namespace {

// θ values are shared between several statements; memoized per run.
class Thetas {
 public:
  const RootEnclosure& nk(int n, int k) {
    auto key = std::make_tuple(n, k, 0);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    RootEnclosure r;
    try {
      r = perron_root(family_P_nk(n, k));
    } catch (const MustReduceError& e) {
      r = nk(e.n_reduced, e.k_reduced);
    }
    return cache_.emplace(key, std::move(r)).first->second;
  }

  // θ_{n,K_n,l}: closed form where one is stated, path matrix otherwise.
  const RootEnclosure& nKl(int n, int l) {
    auto key = std::make_tuple(n, K_of(n), l);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    RootEnclosure r;
    if (n % 2 == 0 && l <= L_of(n))
      r = perron_root(family_P_nKl_even(n, l));
    else if (n % 4 == 3 && l % 2 == 1 && l <= L_of(n))
      r = perron_root(family_P_nKl_odd(n, l));
    else
      r = perron_root(charpoly_exact(path_nKl(n, l)));
    return cache_.emplace(key, std::move(r)).first->second;
  }

  static IntMatrix path_nKl(int n, int l) {
    IntMatrix v = path_matrix(gamma_nkl(n, K_of(n), l));
    if (!is_primitive(v))
      throw Error(ErrorKind::NotPrimitive, "V(γ_{" + std::to_string(n) + ",K," + std::to_string(l) + "}) is not primitive");
    return v;
  }

 private:
  std::map<std::tuple<int, int, int>, RootEnclosure> cache_;
};

std::string show(const RootEnclosure& r) { return r.decimal(12); }

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : r_(r) {}

  // Records a strict comparison a <op> b, where op is Less or Greater.
  void compare(const std::string& group, const std::string& instance, const RootEnclosure& a, Ordering want,
               const RootEnclosure& b) {
    const Ordering got = compare_roots(a, b);
    r_.checks.push_back({group, instance, got == want,
                         show(a) + (got == Ordering::Less ? " < " : got == Ordering::Greater ? " > " : " = ") + show(b)});
  }

  // Runs `f`, turning a library error into a failed instance.
  template <typename F>
  void guarded(const std::string& group, const std::string& instance, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      r_.checks.push_back({group, instance, false, std::string("error: ") + e.what()});
    }
  }

  void record(const std::string& group, const std::string& instance, bool pass, std::string detail = {}) {
    r_.checks.push_back({group, instance, pass, std::move(detail)});
  }

 private:
  VerifyReport& r_;
};

std::string idx(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : " ") << k << '=' << v;
    first = false;
  }
  return os.str();
}

// Positive root of X^e - c.
RootEnclosure radical(int e, int c) {
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(e) + 1);
  coeffs[0] = -c;
  coeffs[static_cast<std::size_t>(e)] = 1;
  return perron_root(IntPolynomial(std::move(coeffs)));
}

// ρ(A) > c certified by column sums: min sum >= c and the sums are not all
// equal (A primitive), or min sum > c.
std::pair<bool, std::string> column_sum_bound(const IntMatrix& a, long c) {
  const int n = a.size();
  mpz_class lo, hi;
  for (int j = 0; j < n; ++j) {
    mpz_class s = 0;
    for (int i = 0; i < n; ++i) s += a.at(i, j);
    if (j == 0 || s < lo) lo = s;
    if (j == 0 || s > hi) hi = s;
  }
  const bool ok = lo > c || (lo == c && hi > lo && is_primitive(a));
  return {ok, "column sums in [" + lo.get_str() + ", " + hi.get_str() + "]"};
}

// (n', k') with θ_{n,k} = θ_{n',k'} and gcd(n'-1, k') = 1.
std::pair<int, int> reduced(int n, int k) {
  const int d = std::gcd(n - 1, k);
  return {(n - 1) / d + 1, k / d};
}

}  // namespace

VerifyReport verify_inequalities(int n_max) {
  if (n_max < 7) throw Error(ErrorKind::OutOfRange, "verify_inequalities needs n_max >= 7");
  VerifyReport rep{"lemmas", {}};
  Recorder rec(rep);
  Thetas th;

  // decreasing sequences
  for (int n = 4; n + 2 <= n_max; n += 2)
    rec.guarded("decreasing", idx({{"even n", n}}), [&] {
      rec.compare("decreasing", idx({{"even n", n}}), th.nk(n + 2, K_of(n + 2)), Ordering::Less, th.nk(n, K_of(n)));
    });
  for (int n = 5; n + 4 <= n_max; n += 4)
    rec.guarded("decreasing", idx({{"n=1mod4", n}}), [&] {
      rec.compare("decreasing", idx({{"n=1mod4", n}}), th.nk(n + 4, K_of(n + 4)), Ordering::Less, th.nk(n, K_of(n)));
    });
  for (int n = 7; n + 4 <= n_max; n += 4)
    rec.guarded("decreasing", idx({{"n=3mod4", n}}), [&] {
      rec.compare("decreasing", idx({{"n=3mod4", n}}), th.nKl(n + 4, L_of(n + 4)), Ordering::Less,
                  th.nKl(n, L_of(n)));
    });

  // θ_{n,k'} < θ_{n,k} for k < k', both coprime to n-1
  for (int n = 4; n <= n_max; ++n)
    for (int k = 1; k <= K_of(n); ++k)
      for (int k2 = k + 1; k2 <= K_of(n); ++k2) {
        if (std::gcd(n - 1, k) != 1 || std::gcd(n - 1, k2) != 1) continue;
        const std::string inst = idx({{"n", n}, {"k", k}, {"k'", k2}});
        rec.guarded("compare-n", inst, [&] { rec.compare("compare-n", inst, th.nk(n, k2), Ordering::Less, th.nk(n, k)); });
      }

  // lower bounds through δ of a matrix power
  const RootEnclosure two = radical(1, 2), sqrt3 = radical(2, 3), root4_6 = radical(4, 6);
  for (int n = 7; n <= n_max; n += 4) {
    const int l = L_of(n) + 2;
    const std::string inst = idx({{"n", n}, {"l", l}});
    rec.guarded("comparing", inst, [&] {
      const IntMatrix v = Thetas::path_nKl(n, l);
      const auto [ok, detail] = column_sum_bound(v.power(2), 4);
      rec.record("comparing", inst + " rho(V^2)>4 by column sums", ok, detail);
      rec.compare("comparing", inst + " theta>2", th.nKl(n, l), Ordering::Greater, two);
    });
  }
  for (int n = 4; n <= n_max; n += 2) {
    const int l = L_of(n) + 1;
    const std::string inst = idx({{"n", n}, {"l", l}});
    rec.guarded("comparing", inst, [&] {
      rec.compare("comparing", inst + " theta>sqrt3", th.nKl(n, l), Ordering::Greater, sqrt3);
    });
  }
  for (int n = 6; n <= n_max; n += 2) {
    const int l = L_of(n) + 2;
    const std::string inst = idx({{"n", n}, {"l", l}});
    rec.guarded("comparing", inst, [&] {
      const IntMatrix v = Thetas::path_nKl(n, l);
      const IntMatrix v4 = v.power(4);
      const mpz_class delta = min_column_sum(v4);
      rec.record("comparing", inst + " delta(V^4)=6", delta == 6, "delta=" + delta.get_str());
      const auto [ok, detail] = column_sum_bound(v4, 6);
      rec.record("comparing", inst + " rho(V^4)>6 by column sums", ok, detail);
      rec.compare("comparing", inst + " theta>6^(1/4)", th.nKl(n, l), Ordering::Greater, root4_6);
    });
  }

  // l ordering at K_n
  for (int n = 7; n <= n_max; n += 4)
    for (int l = 1; l <= L_of(n); l += 2)
      for (int l2 = l + 2; l2 <= L_of(n); l2 += 2) {
        const std::string inst = idx({{"n", n}, {"l", l}, {"l'", l2}});
        rec.guarded("l-odd", inst, [&] { rec.compare("l-odd", inst, th.nKl(n, l), Ordering::Greater, th.nKl(n, l2)); });
      }
  for (int n = 4; n <= n_max; n += 2)
    for (int l = 1; l <= L_of(n); ++l)
      for (int l2 = l + 1; l2 <= L_of(n); ++l2) {
        const std::string inst = idx({{"n", n}, {"l", l}, {"l'", l2}});
        rec.guarded("even-nK2", inst,
                    [&] { rec.compare("even-nK2", inst, th.nKl(n, l), Ordering::Greater, th.nKl(n, l2)); });
      }

  // n ≡ 3 mod 4
  for (int n = 7; n <= n_max; n += 4) {
    const int np = (n + 1) / 2;
    const std::string base = idx({{"n", n}, {"n'", np}});
    rec.guarded("3mod4", base, [&] {
      rec.compare("3mod4", base + " (1)", th.nKl(np, L_of(np)), Ordering::Greater, th.nKl(n, L_of(n)));
      rec.compare("3mod4", base + " (2)", th.nKl(np, L_of(np) + 2), Ordering::Greater, th.nKl(n, L_of(n)));
    });
    for (int k = 1; k <= K_of(n) - 1; ++k) {
      const auto [n2, k2] = reduced(n, k);
      const std::string inst = idx({{"n", n}, {"k", k}, {"n'", n2}, {"k'", k2}}) + " (3)";
      rec.guarded("3mod4", inst, [&] { rec.compare("3mod4", inst, th.nKl(n, L_of(n)), Ordering::Less, th.nk(n2, k2)); });
    }
  }

  // second least value
  for (int n = 18; n <= n_max; n += 2) {
    if (n % 6 == 4) continue;
    const int K = K_of(n), L = L_of(n);
    rec.record("second", idx({{"n", n}}) + " gcd(n-1,K-1)=1", std::gcd(n - 1, K - 1) == 1);
    rec.guarded("second", idx({{"n", n}}), [&] {
      const RootEnclosure& second = th.nk(n, K - 1);
      for (int k = 1; k <= K - 2; ++k)
        rec.compare("second", idx({{"n", n}, {"k", k}}) + " (1)", th.nk(n, k), Ordering::Greater, second);
      for (int l = 1; l <= L; ++l)
        rec.compare("second", idx({{"n", n}, {"l", l}}) + " (2)", th.nKl(n, l), Ordering::Greater, second);
      rec.compare("second", idx({{"n", n}, {"l", L + 1}}) + " (3)", th.nKl(n, L + 1), Ordering::Greater, second);
      rec.compare("second", idx({{"n", n}, {"l", L + 2}}) + " (4)", th.nKl(n, L + 2), Ordering::Greater, second);
    });
  }

  // n ≡ 1 mod 4
  for (int n = 5; n <= n_max; n += 4)
    for (int k = 1; k <= K_of(n) - 1; ++k) {
      const auto [n2, k2] = reduced(n, k);
      const std::string inst = idx({{"n", n}, {"k", k}, {"n'", n2}, {"k'", k2}});
      rec.guarded("1mod4", inst, [&] { rec.compare("1mod4", inst, th.nk(n2, k2), Ordering::Greater, th.nk(n, K_of(n))); });
    }
  return rep;
}

VerifyReport verify_families(int n_max) {
  VerifyReport rep{"families", {}};
  Recorder rec(rep);
  const IntPolynomial x_plus_1{1, 1};
  for (int n = 4; n <= n_max; ++n) {
    for (int k = 1; k <= K_of(n); ++k) {
      if (std::gcd(n - 1, k) != 1) continue;
      const std::string inst = idx({{"n", n}, {"k", k}});
      rec.guarded("P_nk", inst, [&] {
        const IntPolynomial chi = charpoly_exact(path_matrix(gamma_nk(n, k)));
        rec.record("P_nk", inst, x_plus_1 * chi == family_P_nk(n, k), chi.to_string());
        rec.record("V_nk closed form", inst, charpoly_exact(closed_form_vnk(n, k)) == chi);
        rec.record("V_nk split", inst, charpoly_exact(closed_form_vnk_split(n, k)) == chi);
      });
    }
    const int K = K_of(n), L = L_of(n);
    if (n % 2 == 0)
      for (int l = 1; l <= L + 2; ++l) {
        if (l == L + 1) continue;  // no closed form
        const std::string inst = idx({{"n", n}, {"l", l}});
        rec.guarded("P_nKl even", inst, [&] {
          const IntPolynomial chi = charpoly_exact(path_matrix(gamma_nkl(n, K, l)));
          if (l <= L) rec.record("P_nKl even", inst, x_plus_1 * chi == family_P_nKl_even(n, l), chi.to_string());
          rec.record("V_nKl even closed form", inst, charpoly_exact(closed_form_vnKl_even(n, l)) == chi);
        });
      }
    if (n % 4 == 3)
      for (int l = 1; l <= L + 2; l += 2) {
        const std::string inst = idx({{"n", n}, {"l", l}});
        rec.guarded("P_nKl odd", inst, [&] {
          const IntPolynomial chi = charpoly_exact(path_matrix(gamma_nkl(n, K, l)));
          if (l <= L) rec.record("P_nKl odd", inst, x_plus_1 * chi == family_P_nKl_odd(n, l), chi.to_string());
          rec.record("V_nKl odd closed form", inst, charpoly_exact(closed_form_vnKl_odd(n, l)) == chi);
        });
      }

    // primitivity pattern
    const bool prim = is_primitive(path_matrix(gamma_nk(n, K)));
    rec.record("primitivity", idx({{"n", n}, {"k", K}}), prim == (n % 4 != 3), prim ? "primitive" : "not primitive");
    if (n % 4 == 3)
      for (int l = 1; l <= L; ++l) {
        const bool p = is_primitive(path_matrix(gamma_nkl(n, K, l)));
        rec.record("primitivity", idx({{"n", n}, {"k", K}, {"l", l}}), p == (l % 2 == 1), p ? "primitive" : "not primitive");
      }
  }
  return rep;
}

VerifyReport verify_rome(int n_max) {
  VerifyReport rep{"rome", {}};
  Recorder rec(rep);
  for (int n = 4; n <= n_max; ++n)
    for (int k = 1; k <= K_of(n); ++k) {
      if (std::gcd(n - 1, k) != 1) continue;
      const std::string inst = idx({{"n", n}, {"k", k}});
      rec.guarded("rome {1,n}", inst, [&] {
        const IntMatrix v = closed_form_vnk(n, k);
        rec.record("rome {1,n}", inst, rome_charpoly(v, {1, n}) == charpoly_exact(v));
      });
    }
  for (int n = 7; n <= n_max; n += 4)
    for (int l = 1; l <= L_of(n); l += 2) {
      const int m = (n - 1) / 2;
      const std::string inst = idx({{"n", n}, {"l", l}, {"m", m}});
      rec.guarded("rome {n,n-1,m}", inst, [&] {
        const IntMatrix v = closed_form_vnKl_odd(n, l);
        rec.record("rome {n,n-1,m}", inst, rome_charpoly(v, {n, n - 1, m}) == charpoly_exact(v));
      });
    }
  return rep;
}

VerifyReport verify_zrl(const ZrlSuiteOptions& opts) {
  VerifyReport rep{"zrl", {}};
  Recorder rec(rep);
  std::mt19937_64 rng(opts.seed);
  auto theta_of = [](const AdmissiblePath& p) {
    return perron_root(charpoly_exact(path_matrix(RauzyPath::build(p.start, p.word), PathKind::Symmetric)));
  };
  auto on_central_loop = [](const RauzyDiagram& d, const LabeledPermutation& pi) {
    const auto v = d.find(pi);
    return v && d.coordinates(*v).parts.size() == 2;
  };
  for (int n : opts.sizes) {
    const RauzyDiagram d = RauzyDiagram::build(n);
    for (int i = 0; i < opts.samples; ++i) {
      const AdmissiblePath p = sample_pure_admissible(d, rng, opts.length_factor * n);
      const std::string inst = "n=" + std::to_string(n) + " " + p.start.to_string() + " " + format_word(p.word);
      rec.guarded("normalize", inst, [&] {
        const ZrlResult r = zrl_normalize(d, p);
        rec.record("normalize", inst, is_normalized(d, r.path), std::to_string(r.iterations) + " iterations");
        const Ordering o = compare_roots(theta_of(p), theta_of(r.path));
        rec.record("theta preserved", inst, o == Ordering::Equal, to_string(o));
        for (const ZrlStep& s : r.trace) {
          if (s.before.parts.size() < 4) continue;
          std::ostringstream tr;
          for (int x : s.before.parts) tr << x << ' ';
          tr << "->";
          for (int x : s.after.parts) tr << ' ' << x;
          rec.record("coding", inst + " " + tr.str(), zrl_coding_successors(s.before.parts).count(s.after.parts) > 0);
        }
        // fixed point on the normalized start (first step b)
        const ZrlStep s = zrl_step(d, r.path);
        rec.record("fixed point (first step b)", inst, s.path.start.same_up_to_relabeling(r.path.start),
                   "right " + format_word(s.right_word) + " left " + format_word(s.left_word) + " -> " +
                       s.path.start.to_string());
      });
      // the same question for central-loop starts whose first step is t
      if (on_central_loop(d, p.start) && p.word.front() == Move::RightT)
        rec.guarded("fixed point (first step t)", inst, [&] {
          const ZrlStep s = zrl_step(d, p);
          rec.record("fixed point (first step t)", inst, s.path.start.same_up_to_relabeling(p.start),
                     "right " + format_word(s.right_word) + " left " + format_word(s.left_word));
        });
    }
  }
  return rep;
}

}  // namespace hypsys
