#include "zroupoid/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "zroupoid/error.hpp"
#include "zroupoid/order.hpp"

namespace zroupoid {

namespace {

using Cell = std::int16_t;
constexpr Cell kUnknown = -1;

// One unit of work: a zero position and a full prime column.
struct Seed {
  Element zero;
  std::vector<Element> prime;
};

constexpr auto kFree = static_cast<Element>(-1);

void collect_involutions(std::vector<Element>& perm, std::size_t next, std::vector<std::vector<Element>>& out) {
  const std::size_t n = perm.size();
  while (next < n && perm[next] != kFree) ++next;
  if (next == n) {
    out.push_back(perm);
    return;
  }
  const auto x = static_cast<Element>(next);
  perm[x] = x;
  collect_involutions(perm, next + 1, out);
  for (Element y = x + 1; y < n; ++y) {
    if (perm[y] != kFree) continue;
    perm[x] = y;
    perm[y] = x;
    collect_involutions(perm, next + 1, out);
    perm[y] = kFree;
  }
  perm[x] = kFree;
}

std::vector<std::vector<Element>> all_involutions(std::size_t n) {
  std::vector<Element> perm(n, kFree);
  std::vector<std::vector<Element>> out;
  collect_involutions(perm, 0, out);
  return out;
}

// Chains: every chain has exactly one labelling in which ⊑ is the index
// order, so the zero position and the prime column range freely.
// All I_{2,0}: zero is index 0 and the prime column is one representative
// per conjugacy class of involutions under permutations fixing 0.
std::vector<Seed> make_seeds(std::size_t n, SearchMode mode) {
  std::vector<Seed> seeds;
  if (mode == SearchMode::chains_only) {
    const auto involutions = all_involutions(n);
    for (Element z = 0; z < n; ++z) {
      for (const auto& pi : involutions) seeds.push_back({z, pi});
    }
    return seeds;
  }
  for (bool zero_paired : {false, true}) {
    const Element first = zero_paired ? 0 : 1;
    for (std::size_t pairs = zero_paired ? 1 : 0; first + 2 * pairs <= n; ++pairs) {
      std::vector<Element> pi(n);
      for (Element x = 0; x < n; ++x) pi[x] = x;
      for (std::size_t p = 0; p < pairs; ++p) {
        const auto a = static_cast<Element>(first + 2 * p);
        pi[a] = a + 1;
        pi[a + 1] = a;
      }
      seeds.push_back({0, std::move(pi)});
    }
  }
  return seeds;
}

class TableSearch {
 public:
  TableSearch(std::size_t n, SearchMode mode, CellOrder order, std::atomic<std::uint64_t>& nodes,
              std::uint64_t budget)
      : n_(n), mode_(mode), order_(order), nodes_(nodes), budget_(budget) {}

  /// Returns false when the node budget ran out.
  bool run(const Seed& seed, std::vector<FiniteZroupoid>& out) {
    zero_ = seed.zero;
    prime_ = seed.prime;
    table_.assign(n_ * n_, kUnknown);
    forbidden_.assign(n_ * n_, 0);
    trail_.clear();
    if (!install()) return true;
    if (!propagate()) return true;
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t cell = order_ == CellOrder::row_major ? i * n_ + j : j * n_ + i;
        if (table_[cell] == kUnknown) open.push_back(cell);
      }
    }
    return branch(open, 0, out);
  }

 private:
  bool install() {
    for (Element x = 0; x < n_; ++x) {
      if (!set(at(x, zero_), prime_[x])) return false;
    }
    const Element top = prime_[zero_];
    for (Element x = 0; x < n_; ++x) {
      if (!set(at(top, x), x)) return false;
    }
    if (mode_ == SearchMode::chains_only) {
      // x ⊑ y  <=>  (x -> y')' = x  <=>  x -> y' = x'
      for (Element x = 0; x < n_; ++x) {
        for (Element y = 0; y < n_; ++y) {
          const std::size_t cell = at(x, prime_[y]);
          if (x <= y) {
            if (!set(cell, prime_[x])) return false;
          } else {
            forbidden_[cell] |= std::uint32_t{1} << prime_[x];
            if (table_[cell] == static_cast<Cell>(prime_[x])) return false;
          }
        }
      }
    }
    return true;
  }

  std::size_t at(Element x, Element y) const { return x * n_ + y; }

  bool set(std::size_t cell, Element v) {
    if (table_[cell] != kUnknown) return table_[cell] == static_cast<Cell>(v);
    if (forbidden_[cell] & (std::uint32_t{1} << v)) return false;
    table_[cell] = static_cast<Cell>(v);
    trail_.push_back(cell);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[trail_.back()] = kUnknown;
      trail_.pop_back();
    }
  }

  // Checks every instance of (x -> y) -> z = ((z' -> x) -> (y -> z)')' that
  // the partial table determines, and fills the last missing cell of an
  // instance when the other side is known. Runs to a fixpoint.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Element x = 0; x < n_; ++x) {
        for (Element y = 0; y < n_; ++y) {
          const Cell xy = table_[at(x, y)];
          for (Element z = 0; z < n_; ++z) {
            const Cell lhs = xy == kUnknown ? kUnknown : table_[at(xy, z)];
            const Cell a = table_[at(prime_[z], x)];
            const Cell b = table_[at(y, z)];
            if (a == kUnknown || b == kUnknown) continue;
            const std::size_t inner = at(a, prime_[b]);
            const Cell c = table_[inner];
            if (c == kUnknown) {
              if (lhs == kUnknown) continue;
              if (!set(inner, prime_[lhs])) return false;
              changed = true;
              continue;
            }
            const auto rhs = static_cast<Cell>(prime_[c]);
            if (lhs == kUnknown) {
              if (xy == kUnknown) continue;
              if (!set(at(xy, z), rhs)) return false;
              changed = true;
            } else if (lhs != rhs) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool branch(const std::vector<std::size_t>& open, std::size_t pos, std::vector<FiniteZroupoid>& out) {
    const auto visited = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_ != 0 && visited > budget_) return false;
    while (pos < open.size() && table_[open[pos]] != kUnknown) ++pos;
    if (pos == open.size()) {
      record(out);
      return true;
    }
    const std::size_t cell = open[pos];
    for (Element v = 0; v < n_; ++v) {
      const std::size_t mark = trail_.size();
      if (set(cell, v) && propagate()) {
        if (!branch(open, pos + 1, out)) return false;
      }
      undo(mark);
    }
    return true;
  }

  void record(std::vector<FiniteZroupoid>& out) const {
    std::vector<Element> flat(table_.begin(), table_.end());
    auto alg = FiniteZroupoid::from_flat(n_, zero_, std::move(flat));
    // Re-verify through the general checker rather than trusting propagation.
    const bool keep = mode_ == SearchMode::chains_only ? is_chain(alg) : variety_memberships(alg).i20;
    if (keep) out.push_back(canonical_form(alg));
  }

  std::size_t n_;
  SearchMode mode_;
  CellOrder order_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;

  Element zero_ = 0;
  std::vector<Element> prime_;
  std::vector<Cell> table_;
  std::vector<std::uint32_t> forbidden_;
  std::vector<std::size_t> trail_;
};

}  // namespace

EnumerationResult enumerate(const SearchConfig& config) {
  const std::size_t n = config.size;
  const std::size_t limit = config.mode == SearchMode::chains_only ? kChainSearchLimit : kI20SearchLimit;
  if (n == 0) throw ValidationError("size must be at least 1");
  if (n > limit) {
    throw SizeLimit("search supports at most " + std::to_string(limit) + " elements in this mode, got " +
                    std::to_string(n));
  }
  const auto seeds = make_seeds(n, config.mode);
  std::vector<std::vector<FiniteZroupoid>> found(seeds.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};

  auto worker = [&] {
    TableSearch search(n, config.mode, config.cell_order, nodes, config.node_budget);
    for (std::size_t i = next++; i < seeds.size() && !exhausted; i = next++) {
      if (!search.run(seeds[i], found[i])) exhausted = true;
    }
  };
  const unsigned workers = std::max(1u, config.worker_count);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::set<FiniteZroupoid> merged;
  for (auto& batch : found) merged.insert(batch.begin(), batch.end());
  EnumerationResult result;
  result.algebras.assign(merged.begin(), merged.end());
  result.complete = !exhausted;
  result.nodes = nodes.load();
  return result;
}

std::vector<FiniteZroupoid> enumerate_chains(std::size_t size, unsigned workers) {
  return enumerate({size, SearchMode::chains_only, workers}).algebras;
}

std::vector<FiniteZroupoid> enumerate_i20(std::size_t size, unsigned workers) {
  return enumerate({size, SearchMode::all_i20, workers}).algebras;
}

}  // namespace zroupoid
