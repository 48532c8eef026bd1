#pragma once

#include <string>

#include "zroupoid/algebra.hpp"
#include "zroupoid/order.hpp"

namespace zroupoid {

/// Operation table with a "=>" corner, a header row of column labels and
/// one row per left operand. Columns are right-aligned.
std::string format_table(const FiniteZroupoid& alg);

/// "x = 1, y = -2" using the algebra's labels.
std::string format_assignment(const Assignment& assignment, const FiniteZroupoid& alg);

/// ⊑ matrix followed by one line per property and, for total orders, the
/// listing "a0 < a1 < ... < ak".
std::string format_order(const OrderReport& report, const FiniteZroupoid& alg);

}  // namespace zroupoid
