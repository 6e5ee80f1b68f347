#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace phall {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Raised whenever an enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error("oracle out of budget: " + what) {}
};

/// Arithmetic in the prime field F_q.
class FieldOrder {
 public:
  explicit FieldOrder(int q);

  int q() const noexcept { return q_; }
  int add(int a, int b) const noexcept { return (a + b) % q_; }
  int sub(int a, int b) const noexcept { return (a - b + q_) % q_; }
  int mul(int a, int b) const noexcept { return (a * b) % q_; }
  int neg(int a) const noexcept { return a == 0 ? 0 : q_ - a; }
  int inv(int a) const;
  int reduce(long long a) const noexcept {
    long long r = a % q_;
    return static_cast<int>(r < 0 ? r + q_ : r);
  }
  /// Smallest generator of the multiplicative group.
  int primitive_root() const noexcept { return generator_; }

  bool operator==(const FieldOrder& other) const noexcept { return q_ == other.q_; }

 private:
  int q_;
  int generator_ = 1;
  std::vector<int> inverse_;
};

bool is_prime(int n) noexcept;

/// Dense row-major matrix with entries in [0, q).
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> entries;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

  static Matrix identity(std::size_t n);

  int& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  int operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  bool is_zero() const noexcept;
  std::string to_string() const;

  auto operator<=>(const Matrix&) const = default;
};

struct RowEchelon {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(const Matrix& m, const FieldOrder& f);
std::size_t rank(const Matrix& m, const FieldOrder& f);

/// Columns form a basis of the right null space.
Matrix kernel_basis(const Matrix& m, const FieldOrder& f);
/// Independent columns spanning the column space (taken from the input).
Matrix image_basis(const Matrix& m, const FieldOrder& f);
/// Standard basis vectors completing the column span of `basis` to F^n.
Matrix complement_basis(const Matrix& basis, std::size_t n, const FieldOrder& f);

Matrix multiply(const Matrix& a, const Matrix& b, const FieldOrder& f);
Matrix add(const Matrix& a, const Matrix& b, const FieldOrder& f);
Matrix subtract(const Matrix& a, const Matrix& b, const FieldOrder& f);
Matrix negate(const Matrix& a, const FieldOrder& f);
Matrix scale(const Matrix& a, int s, const FieldOrder& f);
Matrix transpose(const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Columns [first, first + count).
Matrix column_slice(const Matrix& a, std::size_t first, std::size_t count);
bool is_invertible(const Matrix& a, const FieldOrder& f);
Matrix inverse(const Matrix& a, const FieldOrder& f);

/// Some solution x of a·x = b (b a column matrix), or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const FieldOrder& f);

/// q^e with overflow detection.
std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e);
/// |GL_n(F_q)|.
std::uint64_t gl_order(unsigned n, const FieldOrder& f);

/// The q^(rows*cols) matrices of a fixed shape, indexed in lexicographic
/// order of their row-major entry strings.
class MatrixRange {
 public:
  MatrixRange(std::size_t rows, std::size_t cols, const FieldOrder& f, std::uint64_t budget);

  std::uint64_t size() const noexcept { return count_; }
  Matrix at(std::uint64_t index) const;

  class iterator {
   public:
    iterator(const MatrixRange* range, std::uint64_t i) : range_(range), i_(i) {}
    Matrix operator*() const { return range_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const MatrixRange* range_;
    std::uint64_t i_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  int q_;
  std::uint64_t count_;
};

MatrixRange enumerate_matrices(std::size_t rows, std::size_t cols, const FieldOrder& f,
                               std::uint64_t budget = kDefaultBudget);

/// Every k-dimensional subspace of F^n exactly once, as an n×k matrix whose
/// columns are the reduced echelon basis. Deterministic order.
std::vector<Matrix> enumerate_subspaces(std::size_t n, std::size_t k, const FieldOrder& f,
                                        std::uint64_t budget = kDefaultBudget);

/// Number of k-dimensional subspaces of F_q^n.
std::uint64_t gaussian_binomial(unsigned n, unsigned k, const FieldOrder& f);

/// Coordinates of the columns of `vectors` in the basis given by the columns
/// of `basis` (which must contain them in its span).
Matrix coordinates_in(const Matrix& basis, const Matrix& vectors, const FieldOrder& f);

}  // namespace phall
