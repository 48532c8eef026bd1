#pragma once

#include <array>
#include <optional>
#include <vector>

#include "zroupoid/algebra.hpp"

namespace zroupoid {

/// x ∧ y = (x -> y')'
Element meet(const FiniteZroupoid& alg, Element x, Element y);
/// x ∨ y = (x' ∧ y')'
Element join(const FiniteZroupoid& alg, Element x, Element y);
/// x ⊑ y iff x ∧ y = x. Defined on any zroupoid, not only where it is an order.
bool leq(const FiniteZroupoid& alg, Element x, Element y);

template <std::size_t N>
struct PropertyVerdict {
  bool holds = true;
  std::optional<std::array<Element, N>> witness;
};

/// The ⊑ relation and its order-theoretic properties. Witnesses are the
/// lexicographically first violations:
///   reflexive      x with not x ⊑ x
///   antisymmetric  (x, y), x != y, with x ⊑ y and y ⊑ x
///   transitive     (x, y, z) with x ⊑ y, y ⊑ z, not x ⊑ z
///   total          (x, y), x < y, with neither x ⊑ y nor y ⊑ x
struct OrderReport {
  std::vector<std::vector<bool>> matrix;
  PropertyVerdict<1> reflexive;
  PropertyVerdict<2> antisymmetric;
  PropertyVerdict<3> transitive;
  PropertyVerdict<2> total;
  /// Present only when ⊑ is a partial order with a maximum.
  std::optional<Element> greatest;

  bool is_partial_order() const noexcept { return reflexive.holds && antisymmetric.holds && transitive.holds; }
  bool is_total_order() const noexcept { return is_partial_order() && total.holds; }
};

OrderReport order_report(const FiniteZroupoid& alg);

/// Member of I_{2,0} on which ⊑ is total.
bool is_chain(const FiniteZroupoid& alg);

/// Elements sorted ascending by ⊑. Precondition: report.is_total_order().
std::vector<Element> chain_listing(const OrderReport& report);

}  // namespace zroupoid
