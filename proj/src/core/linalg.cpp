#include "dsseq/linalg.hpp"

#include <algorithm>
#include <cctype>

namespace dsseq {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad rational: " + std::string(text));
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational q(n, d);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational floor(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

Rational ceil(const Rational& q) { return -floor(-q); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

void Matrix::set_col(std::size_t c, const Vector& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

Matrix Matrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) p(i, j) += a * o(k, j);
    }
  return p;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if ((*this)(i, k) != 0 && v[k] != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix m = *this;
  for (auto& q : m.data_) q *= s;
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (b(p, q) != 0) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix s(a.rows() + b.rows(), a.cols() + b.cols());
  s.set_block(0, 0, a);
  s.set_block(a.rows(), a.cols(), b);
  return s;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  std::size_t lead = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(lead, j));
    Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(lead, j) != 0) m(i, j) -= f * m(lead, j);
    }
    e.pivots.push_back(c);
    ++lead;
  }
  e.rref = m.block(0, lead, 0, cols);
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Echelon e = row_reduce(Matrix::from_rows(vectors, ambient));
  s.pivots_ = e.pivots;
  for (std::size_t i = 0; i < e.rref.rows(); ++i) s.basis_.push_back(e.rref.row(i));
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v(ambient);
    v[i] = 1;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: wrong length");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational f = v[pivots_[i]];
    if (f == 0) continue;
    const Vector& b = basis_[i];
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (b[j] != 0) v[j] -= f * b[j];
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& s) const {
  return std::all_of(s.basis_.begin(), s.basis_.end(), [this](const Vector& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
  if (o.dim() == 0) return *this;
  if (dim() == 0) return o;
  std::vector<Vector> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("subspace intersection: ambient mismatch");
  if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
  // Solve sum a_i u_i = sum b_j w_j.
  Matrix sys(ambient_, dim() + o.dim());
  for (std::size_t i = 0; i < dim(); ++i) sys.set_col(i, basis_[i]);
  for (std::size_t j = 0; j < o.dim(); ++j) {
    Vector w = o.basis_[j];
    for (auto& q : w) q = -q;
    sys.set_col(dim() + j, w);
  }
  Subspace k = kernel(sys);
  std::vector<Vector> vecs;
  for (const Vector& coeffs : k.basis()) {
    Vector v(ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
      if (coeffs[i] != 0)
        for (std::size_t t = 0; t < ambient_; ++t) v[t] += coeffs[i] * basis_[i][t];
    vecs.push_back(std::move(v));
  }
  return span(ambient_, vecs);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, vecs);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace::span(m.rows(), cols);
}

std::optional<Vector> solve(const Matrix& m, const Vector& target) {
  if (target.size() != m.rows()) throw std::invalid_argument("solve: target length mismatch");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  aug.set_block(0, 0, m);
  aug.set_col(n, target);
  Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rref(i, n);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.rref.block(0, n, n, n);
}

std::vector<Vector> quotient_basis(const Subspace& big, const Subspace& small) {
  return QuotientCoords(big, small).reps();
}

QuotientCoords::QuotientCoords(const Subspace& big, const Subspace& small) : small_(small) {
  if (big.ambient_dim() != small.ambient_dim()) throw std::invalid_argument("quotient: ambient mismatch");
  if (!big.contains(small)) throw std::invalid_argument("quotient: small is not contained in big");
  std::vector<Vector> reduced;
  for (const Vector& b : big.basis()) {
    Vector r = small.reduce(b);
    if (!is_zero(r)) reduced.push_back(std::move(r));
  }
  reps_space_ = Subspace::span(big.ambient_dim(), reduced);
  reps_ = reps_space_.basis();
}

Vector QuotientCoords::coords(const Vector& v) const {
  Vector r = small_.reduce(v);
  Vector c(reps_.size());
  const auto& piv = reps_space_.pivots();
  for (std::size_t i = 0; i < reps_.size(); ++i) c[i] = r[piv[i]];
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (reps_[i][j] != 0) r[j] -= c[i] * reps_[i][j];
  }
  if (!is_zero(r)) throw std::invalid_argument("quotient coords: vector not in the big subspace");
  return c;
}

}  // namespace dsseq
