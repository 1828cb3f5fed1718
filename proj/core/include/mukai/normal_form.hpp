#pragma once

#include <vector>

#include "mukai/matrix.hpp"

namespace mukai {

// left * input * right == diagonal, with left and right unimodular and the
// diagonal entries d_0 | d_1 | ... non-negative (zeros last).
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;

  std::size_t rank() const;
  std::vector<Int> elementary_divisors() const;  // nonzero diagonal entries
};

SmithForm smith_normal_form(IntMatrix const& input);

// Canonical basis of the Z-span of the given columns: column echelon form with
// pivots descending down the rows, positive pivots, and entries in earlier
// columns at each pivot row reduced into [0, pivot). Zero columns dropped.
IntMatrix hermite_column_basis(IntMatrix const& generators);

// Saturated basis (as columns) of {x in Z^n : a x = 0}.
IntMatrix integer_kernel(IntMatrix const& a);

// Integer coefficients c with basis * c == x, or nullopt when x is not in the
// Z-span of the columns of basis.
std::optional<Vector> solve_in_span(IntMatrix const& basis, Vector const& x);

// Is the Z-span of the columns a primitive (saturated) sublattice of Z^n?
bool is_primitive_sublattice(IntMatrix const& columns);

}  // namespace mukai
