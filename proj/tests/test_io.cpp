#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "hypsys/io.hpp"
#include "json.hpp"

using namespace hypsys;

TEST_CASE("spectrum JSON") {
  SearchConfig c;
  c.n = 6;
  const SpectrumResult r = spectrum(c);
  const auto j = nlohmann::json::parse(spectrum_json(r));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  const auto& first = j[0];
  CHECK(first["n"] == 6);
  CHECK(first["genus"] == 3);
  CHECK(first["stratum"] == "H(4)");
  CHECK(first["coefficients"] == nlohmann::json::array({1, 0, -2, 0, 0, -2, 0, 1}));
  CHECK(first["root"] == "1.55603019132268");
  CHECK(first["representative"]["word"].get<std::string>().front() == 'b');
  const mpq_class lo(first["root_lo"].get<std::string>()), hi(first["root_hi"].get<std::string>());
  CHECK(lo < hi);
  CHECK(lo.get_d() < 1.5560302);
  CHECK(hi.get_d() > 1.5560301);
  CHECK(std::stod(first["log_root"].get<std::string>()) == doctest::Approx(std::log(1.55603019132268)));
  for (const auto& e : j) {
    CHECK(e.size() == 9);
    const auto& co = e["coefficients"];
    for (std::size_t i = 0; i < co.size(); ++i) CHECK(co[i] == co[co.size() - 1 - i]);
  }
}

TEST_CASE("spectrum CSV") {
  SearchConfig c;
  c.n = 5;
  const SpectrumResult r = spectrum(c);
  std::istringstream in(spectrum_csv(r));
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,genus,stratum,coefficients,root,root_lo,root_hi,k,word,log_root");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind("5,2,\"H(1,1)\",", 0) == 0);
    // the quoted stratum holds the only embedded comma
    CHECK(std::count(line.begin(), line.end(), ',') == 10);
  }
  CHECK(rows == r.entries.size());
}

TEST_CASE("log decimal") {
  const RootEnclosure two = perron_root(IntPolynomial{-2, 0, 1});
  CHECK(log_decimal(two, 6) == "0.346574");
}
