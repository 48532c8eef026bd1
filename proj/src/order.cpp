#include "zroupoid/order.hpp"

#include <algorithm>
#include <numeric>

namespace zroupoid {

Element meet(const FiniteZroupoid& alg, Element x, Element y) { return alg.prime(alg.op(x, alg.prime(y))); }

Element join(const FiniteZroupoid& alg, Element x, Element y) {
  return alg.prime(meet(alg, alg.prime(x), alg.prime(y)));
}

bool leq(const FiniteZroupoid& alg, Element x, Element y) { return meet(alg, x, y) == x; }

OrderReport order_report(const FiniteZroupoid& alg) {
  const auto n = static_cast<Element>(alg.size());
  OrderReport r;
  r.matrix.assign(n, std::vector<bool>(n, false));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) r.matrix[x][y] = leq(alg, x, y);
  }
  const auto& m = r.matrix;

  for (Element x = 0; x < n && r.reflexive.holds; ++x) {
    if (!m[x][x]) r.reflexive = {false, std::array<Element, 1>{x}};
  }
  for (Element x = 0; x < n && r.antisymmetric.holds; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x != y && m[x][y] && m[y][x]) {
        r.antisymmetric = {false, std::array<Element, 2>{x, y}};
        break;
      }
    }
  }
  for (Element x = 0; x < n && r.transitive.holds; ++x) {
    for (Element y = 0; y < n && r.transitive.holds; ++y) {
      if (!m[x][y]) continue;
      for (Element z = 0; z < n; ++z) {
        if (m[y][z] && !m[x][z]) {
          r.transitive = {false, std::array<Element, 3>{x, y, z}};
          break;
        }
      }
    }
  }
  for (Element x = 0; x < n && r.total.holds; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (!m[x][y] && !m[y][x]) {
        r.total = {false, std::array<Element, 2>{x, y}};
        break;
      }
    }
  }
  if (r.is_partial_order()) {
    for (Element g = 0; g < n; ++g) {
      bool top = true;
      for (Element x = 0; x < n && top; ++x) top = m[x][g];
      if (top) {
        r.greatest = g;
        break;
      }
    }
  }
  return r;
}

bool is_chain(const FiniteZroupoid& alg) {
  return variety_memberships(alg).i20 && order_report(alg).is_total_order();
}

std::vector<Element> chain_listing(const OrderReport& report) {
  std::vector<Element> order(report.matrix.size());
  std::iota(order.begin(), order.end(), Element{0});
  // In a total order the number of elements below x is its rank.
  auto rank = [&](Element x) {
    return std::count_if(order.begin(), order.end(), [&](Element y) { return report.matrix[y][x]; });
  };
  std::sort(order.begin(), order.end(), [&](Element a, Element b) { return rank(a) < rank(b); });
  return order;
}

}  // namespace zroupoid
