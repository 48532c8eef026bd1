#include "zroupoid/chain.hpp"

#include <algorithm>

#include "zroupoid/error.hpp"

namespace zroupoid {

namespace {

void require_in_range(int v, const ChainSpec& spec) {
  if (!spec.contains(v)) {
    throw DomainError(std::to_string(v) + " is outside [-" + std::to_string(spec.neg) + ", " +
                      std::to_string(spec.pos) + "]");
  }
}

}  // namespace

Element ChainSpec::index_of(int v) const {
  require_in_range(v, *this);
  return static_cast<Element>(v + static_cast<int>(neg));
}

int ChainSpec::value_of(Element index) const {
  if (index >= size()) throw DomainError("index " + std::to_string(index) + " outside the chain");
  return static_cast<int>(index) - static_cast<int>(neg);
}

std::vector<std::string> ChainSpec::labels() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (Element i = 0; i < size(); ++i) out.push_back(std::to_string(value_of(i)));
  return out;
}

int pred(int v, const ChainSpec& spec) {
  require_in_range(v, spec);
  return v > -static_cast<int>(spec.neg) ? v - 1 : v;
}

int star(int v, const ChainSpec& spec) {
  require_in_range(v, spec);
  if (v < 0) return v;
  int s = static_cast<int>(spec.pos);
  // star(u) = pred(star(pred(u))) and pred(u) = u - 1 for u > 0.
  for (int u = 1; u <= v; ++u) s = pred(s, spec);
  return s;
}

int arrow(int x, int y, const ChainSpec& spec) {
  require_in_range(y, spec);
  if (x >= 0 && y >= 0) return std::max(star(x, spec), y);
  require_in_range(x, spec);
  return std::min(x, y);
}

FiniteZroupoid build_chain(unsigned neg, unsigned pos) {
  const ChainSpec spec{neg, pos};
  const std::size_t n = spec.size();
  std::vector<int> stars(n);
  for (Element i = 0; i < n; ++i) stars[i] = star(spec.value_of(i), spec);
  std::vector<Element> flat(n * n);
  for (Element i = 0; i < n; ++i) {
    const int x = spec.value_of(i);
    for (Element j = 0; j < n; ++j) {
      const int y = spec.value_of(j);
      const int v = (x >= 0 && y >= 0) ? std::max(stars[i], y) : std::min(x, y);
      flat[i * n + j] = spec.index_of(v);
    }
  }
  auto alg = FiniteZroupoid::from_flat(n, spec.index_of(0), std::move(flat), spec.labels());
#ifndef NDEBUG
  // Debug builds re-check the defining identity; release builds trust the construction.
  if (!check_identity(alg, axioms::implication()).holds) throw ClassificationFailure("construction violates (I)");
#endif
  return alg;
}

}  // namespace zroupoid
