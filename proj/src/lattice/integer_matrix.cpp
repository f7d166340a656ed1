#include <sstream>

#include "monoidgeom/lattice.hpp"

namespace monoidgeom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionLimit: return "DimensionLimit";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::MonoidMismatch: return "MonoidMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotSharp: return "NotSharp";
    case ErrorCode::NotFine: return "NotFine";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::WrongHeight: return "WrongHeight";
    case ErrorCode::NonLocalFunctional: return "NonLocalFunctional";
    case ErrorCode::ImproperIdeal: return "ImproperIdeal";
    case ErrorCode::NotAcceptable: return "NotAcceptable";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::WitnessMismatch: return "WitnessMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Validation: return "Validation";
  }
  return "Unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw MonoidError(ErrorCode::DimensionMismatch, "row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw MonoidError(ErrorCode::DimensionMismatch, "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector IntMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector IntMatrix::col(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector IntMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw MonoidError(ErrorCode::DimensionMismatch, "matrix-vector product");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (x[j] != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

Vector IntMatrix::apply_left(const Vector& x) const {
  if (x.size() != rows_) throw MonoidError(ErrorCode::DimensionMismatch, "vector-matrix product");
  Vector y(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) y[j] += x[i] * (*this)(i, j);
  }
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw MonoidError(ErrorCode::DimensionMismatch, "matrix product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

}  // namespace monoidgeom
