#include "hypsys/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace hypsys {

namespace {

nlohmann::ordered_json coefficients(const IntPolynomial& p) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.get_si());
  return a;
}

constexpr int kDigits = 14;

}  // namespace

std::string log_decimal(const RootEnclosure& root, int digits) {
  RootEnclosure r = root;
  r.refine(pow10_inv(digits + 4));
  // log is 1/θ-Lipschitz above 1, so long double is enough at 14 digits
  const long double mid = std::stold(r.decimal(digits + 4));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, std::log(mid));
  return buf;
}

std::string spectrum_json(const SpectrumResult& r) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const SpectrumEntry& e : r.entries) {
    out.push_back({
        {"n", r.n},
        {"genus", genus_of(r.n)},
        {"stratum", stratum_name(r.n)},
        {"coefficients", coefficients(e.polynomial)},
        {"root", e.root.decimal(kDigits)},
        {"root_lo", e.root.lo().get_str()},
        {"root_hi", e.root.hi().get_str()},
        {"representative", {{"k", e.k}, {"word", format_word(e.word)}}},
        {"log_root", log_decimal(e.root, kDigits)},
    });
  }
  return out.dump(2) + "\n";
}

std::string spectrum_csv(const SpectrumResult& r) {
  std::ostringstream os;
  os << "n,genus,stratum,coefficients,root,root_lo,root_hi,k,word,log_root\n";
  for (const SpectrumEntry& e : r.entries)
    os << r.n << ',' << genus_of(r.n) << ",\"" << stratum_name(r.n) << "\","  // H(g-1,g-1) has a comma
       << e.polynomial.ascending_string() << ','
       << e.root.decimal(kDigits) << ',' << e.root.lo().get_str() << ',' << e.root.hi().get_str() << ',' << e.k << ','
       << format_word(e.word) << ',' << log_decimal(e.root, kDigits) << '\n';
  return os.str();
}

}  // namespace hypsys
