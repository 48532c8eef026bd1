#include <algorithm>
#include <numeric>
#include <tuple>

#include "zroupoid/enumerate.hpp"
#include "zroupoid/error.hpp"
#include "zroupoid/order.hpp"

namespace zroupoid {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

// Isomorphism-invariant fingerprint of one element. Two elements that a
// zero-fixing isomorphism can match always have equal fingerprints.
struct Fingerprint {
  bool is_zero;
  bool fixed_by_prime;
  bool idempotent;
  std::size_t prime_orbit;  // length of the orbit of x under priming
  std::vector<std::size_t> row_profile;
  std::vector<std::size_t> column_profile;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

std::vector<std::size_t> value_histogram(const FiniteZroupoid& alg, Element x, bool row) {
  std::vector<std::size_t> counts(alg.size(), 0);
  for (Element y = 0; y < alg.size(); ++y) ++counts[row ? alg.op(x, y) : alg.op(y, x)];
  // Multiset of multiplicities; the values themselves are labels.
  std::sort(counts.begin(), counts.end());
  return counts;
}

std::vector<Fingerprint> fingerprints(const FiniteZroupoid& alg) {
  std::vector<Fingerprint> out;
  for (Element x = 0; x < alg.size(); ++x) {
    std::size_t orbit = 1;
    for (Element y = alg.prime(x); y != x && orbit <= alg.size(); y = alg.prime(y)) ++orbit;
    out.push_back(Fingerprint{x == alg.zero(), alg.prime(x) == x, alg.op(x, x) == x, orbit,
                              value_histogram(alg, x, true), value_histogram(alg, x, false)});
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteZroupoid& a, const FiniteZroupoid& b)
      : a_(a), b_(b), fa_(fingerprints(a)), fb_(fingerprints(b)), fwd_(a.size(), kUnset), inv_(a.size(), kUnset) {
    order_.push_back(a.zero());
    for (Element x = 0; x < a.size(); ++x) {
      if (x != a.zero()) order_.push_back(x);
    }
  }

  std::optional<std::vector<Element>> run() {
    if (!assign(a_.zero(), b_.zero())) return std::nullopt;
    if (extend(1)) return fwd_;
    return std::nullopt;
  }

 private:
  bool assign(Element x, Element y) {
    if (!(fa_[x] == fb_[y])) return false;
    fwd_[x] = y;
    inv_[y] = x;
    // Every product of already-mapped elements must agree in both directions.
    for (Element u = 0; u < a_.size(); ++u) {
      if (fwd_[u] == kUnset) continue;
      for (Element v : {u, x}) {
        for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
          const Element pa = a_.op(p, q);
          const Element pb = b_.op(fwd_[p], fwd_[q]);
          if ((fwd_[pa] != kUnset && fwd_[pa] != pb) || (inv_[pb] != kUnset && inv_[pb] != pa)) {
            fwd_[x] = kUnset;
            inv_[y] = kUnset;
            return false;
          }
        }
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Element x = order_[depth];
    for (Element y = 0; y < b_.size(); ++y) {
      if (inv_[y] != kUnset) continue;
      if (!assign(x, y)) continue;
      if (extend(depth + 1)) return true;
      fwd_[x] = kUnset;
      inv_[y] = kUnset;
    }
    return false;
  }

  const FiniteZroupoid& a_;
  const FiniteZroupoid& b_;
  std::vector<Fingerprint> fa_, fb_;
  std::vector<Element> fwd_, inv_;
  std::vector<Element> order_;
};

}  // namespace

IsoResult are_isomorphic(const FiniteZroupoid& a, const FiniteZroupoid& b) {
  if (a.size() != b.size()) return {};
  auto map = IsoSearch(a, b).run();
  if (!map) return {};
  return IsoResult{true, std::move(map)};
}

FiniteZroupoid canonical_form(const FiniteZroupoid& a) {
  const std::size_t n = a.size();
  if (n > kCanonicalSizeLimit) {
    throw SizeLimit("canonical_form supports at most " + std::to_string(kCanonicalSizeLimit) + " elements, got " +
                    std::to_string(n));
  }
  // placed[j] = element of `a` that receives label j; label 0 is the zero.
  std::vector<Element> placed;
  placed.push_back(a.zero());
  for (Element x = 0; x < n; ++x) {
    if (x != a.zero()) placed.push_back(x);
  }
  std::vector<Element> label(n), best, current(n * n);
  do {
    for (Element j = 0; j < n; ++j) label[placed[j]] = j;
    bool smaller = best.empty();
    bool abandoned = false;
    for (std::size_t i = 0; i < n && !abandoned; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Element v = label[a.op(placed[i], placed[j])];
        current[i * n + j] = v;
        if (!smaller) {
          const Element b = best[i * n + j];
          if (v > b) {
            abandoned = true;
            break;
          }
          if (v < b) smaller = true;
        }
      }
    }
    if (!abandoned && smaller) best = current;
  } while (std::next_permutation(placed.begin() + 1, placed.end()));
  return FiniteZroupoid::from_flat(n, 0, std::move(best));
}

ChainSignature classify_chain(const FiniteZroupoid& a) {
  if (!variety_memberships(a).i20) throw NotAChain("algebra is not in I_{2,0}");
  const OrderReport report = order_report(a);
  if (!report.is_total_order()) throw NotAChain("the order is not total");
  ChainSignature sig;
  for (Element x = 0; x < a.size(); ++x) {
    if (x == a.zero()) continue;
    if (report.matrix[x][a.zero()]) {
      ++sig.neg;
    } else {
      ++sig.pos;
    }
  }
  if (!are_isomorphic(a, build_chain(sig.neg, sig.pos)).isomorphic) {
    throw ClassificationFailure("chain with " + std::to_string(sig.neg) + " elements below and " +
                                std::to_string(sig.pos) + " above zero is not isomorphic to [-" +
                                std::to_string(sig.neg) + ", " + std::to_string(sig.pos) + "]");
  }
  return sig;
}

}  // namespace zroupoid
