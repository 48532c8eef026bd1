#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zroupoid/algebra.hpp"
#include "zroupoid/chain.hpp"

namespace zroupoid {

/// Isomorphisms preserve the arrow and map zero to zero.
struct IsoResult {
  bool isomorphic = false;
  /// map[x] is the image in b of element x of a.
  std::optional<std::vector<Element>> map;
};

IsoResult are_isomorphic(const FiniteZroupoid& a, const FiniteZroupoid& b);

constexpr std::size_t kCanonicalSizeLimit = 8;

/// Lexicographically least table among all relabelings that put zero at
/// index 0. Equal canonical forms <=> isomorphic. Throws SizeLimit above
/// kCanonicalSizeLimit. The result carries no labels.
FiniteZroupoid canonical_form(const FiniteZroupoid& a);

enum class SearchMode { chains_only, all_i20 };

enum class CellOrder { row_major, column_major };

struct SearchConfig {
  std::size_t size = 1;
  SearchMode mode = SearchMode::chains_only;
  unsigned worker_count = 1;
  CellOrder cell_order = CellOrder::row_major;
  /// Stop after this many search nodes in total; 0 means no limit.
  std::uint64_t node_budget = 0;
};

struct EnumerationResult {
  /// Canonical forms, sorted and distinct.
  std::vector<FiniteZroupoid> algebras;
  /// False when the node budget ran out before the search space was covered.
  bool complete = true;
  std::uint64_t nodes = 0;
};

constexpr std::size_t kChainSearchLimit = 8;
constexpr std::size_t kI20SearchLimit = 7;

/// Backtracking search over operation tables. Never consults the interval
/// construction, so its output can be compared against it. Throws SizeLimit
/// when size exceeds the limit of the requested mode.
EnumerationResult enumerate(const SearchConfig& config);

std::vector<FiniteZroupoid> enumerate_chains(std::size_t size, unsigned workers = 1);
std::vector<FiniteZroupoid> enumerate_i20(std::size_t size, unsigned workers = 1);

/// Up-to-isomorphism name of a finite chain: `neg` elements strictly below
/// zero and `pos` strictly above it.
struct ChainSignature {
  unsigned neg = 0;
  unsigned pos = 0;
  friend bool operator==(const ChainSignature&, const ChainSignature&) = default;
};

/// Throws NotAChain if `a` is not an I_{2,0}-chain and ClassificationFailure
/// if `a` is not isomorphic to build_chain(neg, pos).
ChainSignature classify_chain(const FiniteZroupoid& a);

}  // namespace zroupoid
