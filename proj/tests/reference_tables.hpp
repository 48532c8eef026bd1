// Operation tables typed in by hand in signed-value form. Row = left operand,
// rows and columns run from -neg up to pos.
#pragma once

#include <vector>

#include "zroupoid/algebra.hpp"

namespace reference {

struct SignedTable {
  unsigned neg;
  unsigned pos;
  std::vector<std::vector<int>> rows;
};

inline const SignedTable kSix{2, 3,
                              {{-2, -2, -2, -2, -2, -2},
                               {-2, -1, -1, -1, -1, -1},
                               {-2, -1, 3, 3, 3, 3},
                               {-2, -1, 2, 2, 2, 3},
                               {-2, -1, 1, 1, 2, 3},
                               {-2, -1, 0, 1, 2, 3}}};

inline const SignedTable kTwoUp{0, 1, {{1, 1}, {0, 1}}};
inline const SignedTable kTwoDown{1, 0, {{-1, -1}, {-1, 0}}};

inline const SignedTable kThreeUp{0, 2, {{2, 2, 2}, {1, 1, 2}, {0, 1, 2}}};
inline const SignedTable kThreeMid{1, 1, {{-1, -1, -1}, {-1, 1, 1}, {-1, 0, 1}}};
inline const SignedTable kThreeDown{2, 0, {{-2, -2, -2}, {-2, -1, -1}, {-2, -1, 0}}};

inline const std::vector<const SignedTable*> kAll{&kSix, &kTwoUp, &kTwoDown, &kThreeUp, &kThreeMid, &kThreeDown};

// Index form: value v sits at index v + neg.
inline zroupoid::FiniteZroupoid to_algebra(const SignedTable& s) {
  std::vector<std::vector<zroupoid::Element>> t;
  for (const auto& row : s.rows) {
    std::vector<zroupoid::Element> r;
    for (int v : row) r.push_back(static_cast<zroupoid::Element>(v + static_cast<int>(s.neg)));
    t.push_back(r);
  }
  return zroupoid::make_algebra(t.size(), s.neg, t);
}

}  // namespace reference
