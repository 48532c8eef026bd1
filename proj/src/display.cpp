#include "zroupoid/display.hpp"

#include <algorithm>
#include <sstream>

namespace zroupoid {

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

template <std::size_t N>
std::string verdict_line(const char* name, const PropertyVerdict<N>& v, const FiniteZroupoid& alg) {
  std::string out = std::string(name) + ": " + (v.holds ? "yes" : "no");
  if (v.witness) {
    out += " (witness";
    for (Element x : *v.witness) out += " " + alg.label(x);
    out += ")";
  }
  return out + "\n";
}

}  // namespace

std::string format_table(const FiniteZroupoid& alg) {
  const std::size_t n = alg.size();
  std::size_t width = 2;
  for (Element x = 0; x < n; ++x) width = std::max(width, alg.label(x).size());
  std::ostringstream out;
  out << pad("=>", width);
  for (Element y = 0; y < n; ++y) out << ' ' << pad(alg.label(y), width);
  out << '\n';
  for (Element x = 0; x < n; ++x) {
    out << pad(alg.label(x), width);
    for (Element y = 0; y < n; ++y) out << ' ' << pad(alg.label(alg.op(x, y)), width);
    out << '\n';
  }
  return out.str();
}

std::string format_assignment(const Assignment& assignment, const FiniteZroupoid& alg) {
  std::string out;
  for (const auto& [name, value] : assignment) {
    if (!out.empty()) out += ", ";
    out += name + " = " + alg.label(value);
  }
  return out;
}

std::string format_order(const OrderReport& report, const FiniteZroupoid& alg) {
  const std::size_t n = alg.size();
  std::size_t width = 2;
  for (Element x = 0; x < n; ++x) width = std::max(width, alg.label(x).size());
  std::ostringstream out;
  out << pad("<=", width);
  for (Element y = 0; y < n; ++y) out << ' ' << pad(alg.label(y), width);
  out << '\n';
  for (Element x = 0; x < n; ++x) {
    out << pad(alg.label(x), width);
    for (Element y = 0; y < n; ++y) out << ' ' << pad(report.matrix[x][y] ? "1" : ".", width);
    out << '\n';
  }
  out << verdict_line("reflexive", report.reflexive, alg);
  out << verdict_line("antisymmetric", report.antisymmetric, alg);
  out << verdict_line("transitive", report.transitive, alg);
  out << verdict_line("total", report.total, alg);
  if (report.greatest) out << "greatest: " << alg.label(*report.greatest) << '\n';
  if (report.is_total_order()) {
    const auto listing = chain_listing(report);
    for (std::size_t i = 0; i < listing.size(); ++i) out << (i ? " < " : "") << alg.label(listing[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace zroupoid
