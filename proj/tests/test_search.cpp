#include <map>
#include <set>

#include "doctest.h"
#include "hypsys/errors.hpp"
#include "hypsys/families.hpp"
#include "hypsys/search.hpp"

using namespace hypsys;

namespace {

SearchConfig config(int n) {
  SearchConfig c;
  c.n = n;
  return c;
}

}  // namespace

TEST_CASE("distinct lengths below 2, n = 4..12") {
  const std::map<int, std::size_t> expected{{4, 1}, {6, 4}, {8, 11}, {10, 22}, {12, 79}};
  for (const auto& [n, count] : expected) {
    const SpectrumResult r = spectrum(config(n));
    CAPTURE(n);
    CHECK(r.stats.complete());
    CHECK(r.entries.size() == count);
    for (std::size_t i = 1; i < r.entries.size(); ++i)
      CHECK(compare_roots(r.entries[i - 1].root, r.entries[i].root) == Ordering::Less);
  }
}

TEST_CASE("genus 3 spectrum") {
  const SpectrumResult r = spectrum(config(6));
  REQUIRE(r.entries.size() == 4);
  const std::vector<IntPolynomial> expected{
      IntPolynomial::from_descending({1, 0, -2, 0, 0, -2, 0, 1}),
      IntPolynomial::from_descending({1, 0, -2, -1, -1, -2, 0, 1}),
      IntPolynomial::from_descending({1, 0, -3, 0, 0, -3, 0, 1}),
      IntPolynomial::from_descending({1, 0, -2, -2, -2, -2, 0, 1}),
  };
  const std::vector<std::string> decimals{"1.55603019132268", "1.78164359860800", "1.85118903363607",
                                          "1.94685626827188"};
  for (std::size_t i = 0; i < 4; ++i) {
    CAPTURE(i);
    CHECK(compare_roots(r.entries[i].root, perron_root(expected[i])) == Ordering::Equal);
    CHECK(r.entries[i].root.decimal(14) == decimals[i]);
  }
}

TEST_CASE("odd n runs in the other stratum") {
  const SpectrumResult r = spectrum(config(5));
  CHECK(r.stats.complete());
  CHECK(stratum_name(5) == "H(1,1)");
  CHECK(stratum_name(6) == "H(4)");
  CHECK(genus_of(5) == 2);
  CHECK(genus_of(6) == 3);
}

TEST_CASE("systole matches the closed form, n = 4..12") {
  for (int n = 4; n <= 12; ++n) {
    CAPTURE(n);
    const SystoleResult s = systole(n);
    CHECK(compare_roots(s.entry.root, perron_root(systole_polynomial(n))) == Ordering::Equal);
    CHECK(s.entry.word.front() == Move::RightB);
  }
  const SystoleResult s4 = systole(4);
  CHECK(s4.entry.root.decimal(14) == "1.72208380573904");
}

TEST_CASE("thread count does not change the result") {
  SearchConfig one = config(10), two = config(10);
  two.threads = 2;
  const SpectrumResult a = spectrum(one), b = spectrum(two);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].polynomial == b.entries[i].polynomial);
    CHECK(a.entries[i].k == b.entries[i].k);
    CHECK(a.entries[i].word == b.entries[i].word);
  }
}

TEST_CASE("budgets make the search incomplete") {
  SearchConfig c = config(10);
  c.max_depth = 8;
  CHECK(spectrum(c).stats.depth_limited);
  SearchConfig t = config(16);
  t.time_budget = 1e-3;
  CHECK(spectrum(t).stats.out_of_time);
  CHECK_FALSE(spectrum(t).stats.complete());
}

TEST_CASE("emitted paths respect the bound and have reciprocal charpolys") {
  SearchConfig c = config(8);
  std::size_t seen = 0;
  const RootEnclosure floor = perron_root(systole_polynomial(8));
  c.on_emit = [&](const Emission& e) {
    ++seen;
    CHECK(e.word.front() == Move::RightB);
    CHECK(e.charpoly.is_reciprocal());
    const RootEnclosure r = perron_root(e.charpoly);
    CHECK(compare_root(r, 2) == Ordering::Less);
    CHECK(compare_roots(r, floor) != Ordering::Less);
    // search charpolys come from the fast path; recompute exactly
    const RauzyPath p = RauzyPath::build(central_loop_vertex(8, e.k), e.word);
    CHECK(charpoly_exact(path_matrix(p)) == e.charpoly);
  };
  const SearchStats st = enumerate_admissible(c);
  CHECK(st.complete());
  CHECK(seen == st.emitted);
  CHECK(seen > 0);
}

TEST_CASE("continuing past the target keeps the census") {
  for (int n : {6, 8, 10}) {
    SearchConfig c = config(n);
    c.continue_past_target = true;
    CHECK(spectrum(c).entries.size() == spectrum(config(n)).entries.size());
  }
}

TEST_CASE("charpoly_fast agrees with the exact charpoly") {
  for (int n = 4; n <= 12; ++n)
    for (int k = 1; k <= K_of(n); ++k) {
      const IntMatrix v = path_matrix(gamma_nk(n, k));
      CHECK(charpoly_fast(v, 2.0) == charpoly_exact(v));
    }
}

TEST_CASE("second least value") {
  const SystoleResult s = second_length(18);
  CHECK(s.stats.complete());
  CHECK(s.entry.root.decimal(14) == "1.51252089448929");
  CHECK_THROWS_AS(second_length(16), Error);
}

TEST_CASE("census table") {
  const auto rows = census_table(2, 5);
  REQUIRE(rows.size() == 4);
  const std::vector<std::size_t> counts{1, 4, 11, 22};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rows[i].genus == static_cast<int>(i) + 2);
    CHECK(rows[i].n == 2 * rows[i].genus);
    CHECK(rows[i].count == counts[i]);
    CHECK(rows[i].complete);
  }
}
