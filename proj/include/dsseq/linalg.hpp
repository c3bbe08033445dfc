#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsseq {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// num/den in lowest terms.
Rational frac(long num, long den);
Rational floor(const Rational& q);
Rational ceil(const Rational& q);

bool is_zero(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_col(std::size_t c, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;
  // Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix rref;                      // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Gauss-Jordan with first-nonzero-row pivoting, columns left to right.
Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its projection along the echelon basis; zero iff v is in the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& s) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& target);
std::optional<Matrix> inverse(const Matrix& m);

// Coset representatives of big/small; throws std::invalid_argument unless small is in big.
std::vector<Vector> quotient_basis(const Subspace& big, const Subspace& small);

// Coordinates in big/small with respect to quotient_basis(big, small).
class QuotientCoords {
 public:
  QuotientCoords() = default;
  QuotientCoords(const Subspace& big, const Subspace& small);

  std::size_t dim() const { return reps_.size(); }
  const std::vector<Vector>& reps() const { return reps_; }
  // Throws std::invalid_argument if v is not in big.
  Vector coords(const Vector& v) const;

 private:
  Subspace small_;
  Subspace reps_space_;
  std::vector<Vector> reps_;
};

}  // namespace dsseq
