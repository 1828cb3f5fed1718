#include "mukai/normal_form.hpp"

#include <utility>

namespace mukai {
namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += f * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, Int const& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) += f * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, Int const& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) += f * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

void negate_col(IntMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

}  // namespace

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  std::size_t const n = std::min(diagonal.rows(), diagonal.cols());
  while (r < n && diagonal(r, r) != 0) ++r;
  return r;
}

std::vector<Int> SmithForm::elementary_divisors() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(IntMatrix const& input) {
  std::size_t const rows = input.rows();
  std::size_t const cols = input.cols();
  IntMatrix a = input;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Int const v = abs(a(i, j));
          if (!found || v < best) {
            found = true;
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (!found) goto done;
      swap_rows(a, t, pi);
      swap_rows(left, t, pi);
      swap_cols(a, t, pj);
      swap_cols(right, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int const q = a(i, t) / a(t, t);
        add_row(a, i, t, -q);
        add_row(left, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int const q = a(t, j) / a(t, t);
        add_col(a, j, t, -q);
        add_col(right, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(a, t, i, Int(1));
            add_row(left, t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(left, t);
    }
  }
done:
  return {std::move(left), std::move(a), std::move(right)};
}

IntMatrix hermite_column_basis(IntMatrix const& generators) {
  IntMatrix a = generators;
  std::size_t const n = a.rows();
  std::size_t const k = a.cols();
  std::size_t next = 0;  // columns [0, next) are pivots
  std::vector<std::size_t> pivot_rows;
  for (std::size_t row = 0; row < n && next < k; ++row) {
    // Euclid across the non-pivot columns at this row.
    while (true) {
      std::size_t best = k;
      for (std::size_t j = next; j < k; ++j)
        if (a(row, j) != 0 && (best == k || abs(a(row, j)) < abs(a(row, best)))) best = j;
      if (best == k) break;
      swap_cols(a, next, best);
      bool reduced = true;
      for (std::size_t j = next + 1; j < k; ++j) {
        if (a(row, j) == 0) continue;
        Int const q = a(row, j) / a(row, next);
        add_col(a, j, next, -q);
        if (a(row, j) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (a(row, next) == 0) continue;
    if (a(row, next) < 0) negate_col(a, next);
    for (std::size_t j = 0; j < next; ++j) {
      Int const q = floor_div(a(row, j), a(row, next));
      add_col(a, j, next, -q);
    }
    pivot_rows.push_back(row);
    ++next;
  }
  IntMatrix out(n, next);
  for (std::size_t j = 0; j < next; ++j)
    for (std::size_t i = 0; i < n; ++i) out(i, j) = a(i, j);
  return out;
}

IntMatrix integer_kernel(IntMatrix const& a) {
  SmithForm const snf = smith_normal_form(a);
  std::size_t const r = snf.rank();
  std::size_t const n = a.cols();
  IntMatrix basis(n, n - r);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j - r) = snf.right(i, j);
  return basis;
}

std::optional<Vector> solve_in_span(IntMatrix const& basis, Vector const& x) {
  if (basis.rows() != x.size()) throw PreconditionError("solve_in_span dimension mismatch");
  SmithForm const snf = smith_normal_form(basis);
  std::size_t const r = snf.rank();
  Vector const ux = snf.left * x;
  Vector y(basis.cols());
  for (std::size_t i = 0; i < ux.size(); ++i) {
    if (i < r) {
      if (ux[i] % snf.diagonal(i, i) != 0) return std::nullopt;
      y[i] = ux[i] / snf.diagonal(i, i);
    } else if (ux[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.right * y;
}

bool is_primitive_sublattice(IntMatrix const& columns) {
  SmithForm const snf = smith_normal_form(columns);
  for (auto const& d : snf.elementary_divisors())
    if (d != 1) return false;
  return true;
}

}  // namespace mukai
