#include "phall/ffla.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace phall {

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldOrder::FieldOrder(int q) : q_(q) {
  if (!is_prime(q)) throw std::invalid_argument("field order must be prime, got " + std::to_string(q));
  if (q > 46340) throw std::invalid_argument("field order too large");
  inverse_.assign(q, 0);
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if ((a * b) % q == 1) {
        inverse_[a] = b;
        break;
      }
    }
  }
  for (int g = 1; g < q; ++g) {
    int x = 1;
    int order = 0;
    do {
      x = (x * g) % q;
      ++order;
    } while (x != 1);
    if (order == q - 1) {
      generator_ = g;
      break;
    }
  }
}

int FieldOrder::inv(int a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero in F_q");
  return inverse_[a % q_];
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](int x) { return x == 0; });
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows; ++r) {
    if (r) out << ',';
    out << '[';
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) out << ',';
      out << (*this)(r, c);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

RowEchelon rref(const Matrix& m, const FieldOrder& f) {
  RowEchelon out{m, 0, {}};
  Matrix& a = out.form;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols; ++c) std::swap(a(pivot, c), a(row, c));
    }
    int s = f.inv(a(row, col));
    for (std::size_t c = 0; c < a.cols; ++c) a(row, c) = f.mul(a(row, c), s);
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || a(r, col) == 0) continue;
      int factor = a(r, col);
      for (std::size_t c = 0; c < a.cols; ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank(const Matrix& m, const FieldOrder& f) { return rref(m, f).rank; }

Matrix kernel_basis(const Matrix& m, const FieldOrder& f) {
  RowEchelon e = rref(m, f);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix k(m.cols, m.cols - e.rank);
  std::size_t j = 0;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    k(free, j) = 1;
    for (std::size_t r = 0; r < e.rank; ++r) k(e.pivots[r], j) = f.neg(e.form(r, free));
    ++j;
  }
  return k;
}

Matrix image_basis(const Matrix& m, const FieldOrder& f) {
  RowEchelon e = rref(m, f);
  Matrix out(m.rows, e.rank);
  for (std::size_t j = 0; j < e.rank; ++j) {
    for (std::size_t r = 0; r < m.rows; ++r) out(r, j) = m(r, e.pivots[j]);
  }
  return out;
}

Matrix complement_basis(const Matrix& basis, std::size_t n, const FieldOrder& f) {
  Matrix work = hstack(basis, Matrix::identity(n));
  RowEchelon e = rref(work, f);
  std::vector<std::size_t> chosen;
  for (std::size_t p : e.pivots) {
    if (p >= basis.cols) chosen.push_back(p - basis.cols);
  }
  Matrix out(n, chosen.size());
  for (std::size_t j = 0; j < chosen.size(); ++j) out(chosen[j], j) = 1;
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b, const FieldOrder& f) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch in multiply");
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b, const FieldOrder& f) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch in add");
  Matrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.entries.size(); ++i) c.entries[i] = f.add(a.entries[i], b.entries[i]);
  return c;
}

Matrix subtract(const Matrix& a, const Matrix& b, const FieldOrder& f) { return add(a, negate(b, f), f); }

Matrix negate(const Matrix& a, const FieldOrder& f) { return scale(a, f.neg(1), f); }

Matrix scale(const Matrix& a, int s, const FieldOrder& f) {
  Matrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.entries.size(); ++i) c.entries[i] = f.mul(a.entries[i], s);
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) t(c, r) = a(r, c);
  }
  return t;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("row mismatch in hstack");
  Matrix c(a.rows, a.cols + b.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t j = 0; j < a.cols; ++j) c(r, j) = a(r, j);
    for (std::size_t j = 0; j < b.cols; ++j) c(r, a.cols + j) = b(r, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("column mismatch in vstack");
  Matrix c(a.rows + b.rows, a.cols);
  std::copy(a.entries.begin(), a.entries.end(), c.entries.begin());
  std::copy(b.entries.begin(), b.entries.end(), c.entries.begin() + static_cast<std::ptrdiff_t>(a.entries.size()));
  return c;
}

Matrix column_slice(const Matrix& a, std::size_t first, std::size_t count) {
  Matrix c(a.rows, count);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t j = 0; j < count; ++j) c(r, j) = a(r, first + j);
  }
  return c;
}

bool is_invertible(const Matrix& a, const FieldOrder& f) {
  return a.rows == a.cols && rank(a, f) == a.rows;
}

Matrix inverse(const Matrix& a, const FieldOrder& f) {
  if (a.rows != a.cols) throw std::invalid_argument("inverse of non-square matrix");
  RowEchelon e = rref(hstack(a, Matrix::identity(a.rows)), f);
  if (e.rank < a.rows || (a.rows > 0 && e.pivots[a.rows - 1] >= a.rows)) {
    throw std::domain_error("matrix is singular");
  }
  return column_slice(e.form, a.cols, a.rows);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const FieldOrder& f) {
  if (a.rows != b.rows) throw std::invalid_argument("row mismatch in solve");
  RowEchelon e = rref(hstack(a, b), f);
  Matrix x(a.cols, b.cols);
  for (std::size_t r = 0; r < e.rank; ++r) {
    std::size_t p = e.pivots[r];
    if (p >= a.cols) return std::nullopt;
    for (std::size_t j = 0; j < b.cols; ++j) x(p, j) = e.form(r, a.cols + j);
  }
  return x;
}

std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q) {
      throw std::overflow_error("integer power overflows 64 bits");
    }
    r *= q;
  }
  return r;
}

std::uint64_t gl_order(unsigned n, const FieldOrder& f) {
  const std::uint64_t q = static_cast<std::uint64_t>(f.q());
  const std::uint64_t qn = checked_pow(q, n);
  std::uint64_t r = 1;
  std::uint64_t qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t factor = qn - qi;
    if (factor != 0 && r > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("gl_order overflows 64 bits");
    }
    r *= factor;
    qi *= q;
  }
  return r;
}

MatrixRange::MatrixRange(std::size_t rows, std::size_t cols, const FieldOrder& f, std::uint64_t budget)
    : rows_(rows), cols_(cols), q_(f.q()) {
  std::uint64_t cells = static_cast<std::uint64_t>(rows) * cols;
  try {
    count_ = checked_pow(static_cast<std::uint64_t>(q_), cells);
  } catch (const std::overflow_error&) {
    throw BudgetExceeded("matrix enumeration of shape " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (count_ > budget) {
    throw BudgetExceeded(std::to_string(count_) + " matrices of shape " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " exceed budget " + std::to_string(budget));
  }
}

Matrix MatrixRange::at(std::uint64_t index) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = m.entries.size(); i-- > 0;) {
    m.entries[i] = static_cast<int>(index % static_cast<std::uint64_t>(q_));
    index /= static_cast<std::uint64_t>(q_);
  }
  return m;
}

MatrixRange enumerate_matrices(std::size_t rows, std::size_t cols, const FieldOrder& f, std::uint64_t budget) {
  return MatrixRange(rows, cols, f, budget);
}

std::uint64_t gaussian_binomial(unsigned n, unsigned k, const FieldOrder& f) {
  if (k > n) return 0;
  // Exact via the product formula; numerator and denominator divide cleanly step by step.
  const std::uint64_t q = static_cast<std::uint64_t>(f.q());
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= checked_pow(q, n - i) - 1;
    den *= checked_pow(q, i + 1) - 1;
  }
  return num / den;
}

std::vector<Matrix> enumerate_subspaces(std::size_t n, std::size_t k, const FieldOrder& f, std::uint64_t budget) {
  std::vector<Matrix> out;
  if (k > n) return out;
  std::uint64_t total = gaussian_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k), f);
  if (total > budget) throw BudgetExceeded(std::to_string(total) + " subspaces exceed budget");
  out.reserve(total);
  // Walk pivot sets in lexicographic order; for each, enumerate the free
  // entries of a k×n reduced row-echelon matrix.
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cells.emplace_back(r, c);
      }
    }
    std::uint64_t combos = checked_pow(static_cast<std::uint64_t>(f.q()), free_cells.size());
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      Matrix basis(n, k);
      for (std::size_t r = 0; r < k; ++r) basis(pivots[r], r) = 1;
      std::uint64_t rest = idx;
      for (std::size_t cell = free_cells.size(); cell-- > 0;) {
        basis(free_cells[cell].second, free_cells[cell].first) = static_cast<int>(rest % f.q());
        rest /= static_cast<std::uint64_t>(f.q());
      }
      out.push_back(std::move(basis));
    }
    bool advanced = false;
    for (std::size_t i = k; i-- > 0;) {
      if (pivots[i] < n - k + i) {
        ++pivots[i];
        for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

Matrix coordinates_in(const Matrix& basis, const Matrix& vectors, const FieldOrder& f) {
  auto x = solve(basis, vectors, f);
  if (!x) throw std::logic_error("vectors are not in the span of the basis");
  return *x;
}

}  // namespace phall
