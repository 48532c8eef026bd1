#pragma once

#include <string>
#include <vector>

#include "zroupoid/algebra.hpp"

namespace zroupoid {

/// The integer interval [-neg, pos] carrying the interval chain algebra.
/// Value v lives at element index v + neg, so the zero sits at index neg.
struct ChainSpec {
  unsigned neg = 0;
  unsigned pos = 0;

  std::size_t size() const noexcept { return std::size_t{neg} + pos + 1; }
  bool contains(int v) const noexcept { return v >= -static_cast<int>(neg) && v <= static_cast<int>(pos); }
  Element index_of(int v) const;
  int value_of(Element index) const;
  std::vector<std::string> labels() const;

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

// All three throw DomainError for values outside [-neg, pos].

/// v - 1, saturating at -neg.
int pred(int v, const ChainSpec& spec);

/// pos at 0, the identity on negatives, and pred(star(pred(v))) above 0.
/// Computed by walking up from 0 rather than by recursion.
int star(int v, const ChainSpec& spec);

/// max(star(x), y) when both are non-negative, min(x, y) otherwise.
int arrow(int x, int y, const ChainSpec& spec);

FiniteZroupoid build_chain(unsigned neg, unsigned pos);
inline FiniteZroupoid build_chain(const ChainSpec& spec) { return build_chain(spec.neg, spec.pos); }

}  // namespace zroupoid
