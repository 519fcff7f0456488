#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "starpir/field.hpp"

namespace starpir {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static Matrix identity(const Field& field, std::size_t n);
  /// Convenience for literals: `Matrix::from_rows(gf2, {{1, 0}, {0, 1}})`.
  static Matrix from_rows(const Field& field,
                          std::initializer_list<std::initializer_list<Element>> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> entries() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Reduced row echelon form and the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

/// Row vector times matrix.
std::vector<Element> multiply(std::span<const Element> v, const Matrix& m);

/// Gauss-Jordan elimination. The pivot of each step is the first nonzero
/// entry scanning columns left to right, rows top to bottom, so the output
/// is deterministic.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m * v^T = 0}, one row per free column of rref(m), ordered
/// by free column. cols - rank rows; zero rows when m has full column rank.
Matrix right_kernel(const Matrix& m);

/// Throws SingularMatrix for non-invertible or non-square input.
Matrix invert(const Matrix& m);

/// Nonzero rows of rref(m).
Matrix row_basis(const Matrix& m);
bool same_row_space(const Matrix& a, const Matrix& b);

Matrix select_columns(const Matrix& m, std::span<const std::size_t> columns);
Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Text format: `q rows cols` then `rows` lines of `cols` representatives.
void write_matrix(std::ostream& out, const Matrix& m);
std::string to_text(const Matrix& m);
/// Reads one matrix. A field may be supplied to pin the modulus; otherwise
/// the field of order q with the default modulus is used.
Matrix read_matrix(std::istream& in);
Matrix read_matrix(std::istream& in, const Field& field);
Matrix read_matrix_file(const std::string& path);

}  // namespace starpir
