#include "starpir/matrix.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "starpir/errors.hpp"

namespace starpir {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (!(a.field() == b.field())) throw ValidationError(std::string(what) + ": field mismatch");
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw ValidationError("matrix entry count does not match shape");
  for (Element e : data_)
    if (!field_.contains(e))
      throw ValidationError("entry " + std::to_string(e) + " outside " + field_.name());
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& field,
                         std::initializer_list<std::initializer_list<Element>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Element> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw ValidationError("ragged matrix literal");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(field, r, c, std::move(data));
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols() != b.rows())
    throw ValidationError("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                          std::to_string(b.rows()) + " disagree");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) f.axpy(dst, a(i, l), b.row(l));
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("add: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().add(a(i, j), b(i, j));
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "subtract");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("subtract: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().sub(a(i, j), b(i, j));
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

std::vector<Element> multiply(std::span<const Element> v, const Matrix& m) {
  if (v.size() != m.rows()) throw ValidationError("vector-matrix product: length mismatch");
  const Field& f = m.field();
  std::vector<Element> out(m.cols(), 0);
  for (std::size_t l = 0; l < v.size(); ++l) f.axpy(out, v[l], m.row(l));
  return out;
}

Echelon rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Element scale = f.inv(a(r, c));
    auto pivot_row = a.row(r);
    for (std::size_t j = c; j < a.cols(); ++j) pivot_row[j] = f.mul(pivot_row[j], scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      f.axpy(a.row(i).subspan(c), f.neg(a(i, c)), pivot_row.subspan(c));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix right_kernel(const Matrix& m) {
  const Field& f = m.field();
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix k(f, free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t fc = free_cols[i];
    k(i, fc) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(i, e.pivots[r]) = f.neg(e.reduced(r, fc));
  }
  return k;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw SingularMatrix("invert: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix("invert: matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix row_basis(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<std::size_t> rows(e.rank());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return select_rows(e.reduced, rows);
}

bool same_row_space(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()) || a.cols() != b.cols()) return false;
  return row_basis(a) == row_basis(b);
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> columns) {
  Matrix out(m.field(), m.rows(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] >= m.cols()) throw ValidationError("column index out of range");
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, columns[j]);
  }
  return out;
}

Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows) {
  Matrix out(m.field(), rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= m.rows()) throw ValidationError("row index out of range");
    auto src = m.row(rows[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top, bottom, "vstack");
  if (top.cols() != bottom.cols()) throw ValidationError("vstack: column count mismatch");
  std::vector<Element> data(top.entries().begin(), top.entries().end());
  data.insert(data.end(), bottom.entries().begin(), bottom.entries().end());
  return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(data));
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.field().order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

std::string to_text(const Matrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

namespace {

Matrix read_body(std::istream& in, const Field& field, std::size_t rows, std::size_t cols) {
  std::vector<Element> data(rows * cols);
  for (auto& e : data) {
    long long v;
    if (!(in >> v)) throw ValidationError("matrix text: truncated entries");
    if (v < 0 || v >= static_cast<long long>(field.order()))
      throw ValidationError("matrix text: entry " + std::to_string(v) + " outside " + field.name());
    e = static_cast<Element>(v);
  }
  return Matrix(field, rows, cols, std::move(data));
}

}  // namespace

Matrix read_matrix(std::istream& in) {
  long long q, rows, cols;
  if (!(in >> q >> rows >> cols)) throw ValidationError("matrix text: missing `q rows cols` header");
  if (q < 2 || q > kMaxFieldOrder || rows < 0 || cols < 0)
    throw ValidationError("matrix text: bad header");
  return read_body(in, Field::of_order(static_cast<std::uint32_t>(q)), static_cast<std::size_t>(rows),
                   static_cast<std::size_t>(cols));
}

Matrix read_matrix(std::istream& in, const Field& field) {
  long long q, rows, cols;
  if (!(in >> q >> rows >> cols)) throw ValidationError("matrix text: missing `q rows cols` header");
  if (q != field.order()) throw ValidationError("matrix text: field order mismatch");
  if (rows < 0 || cols < 0) throw ValidationError("matrix text: bad header");
  return read_body(in, field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open matrix file " + path);
  return read_matrix(in);
}

}  // namespace starpir
