#include <algorithm>

#include "monoidgeom/lattice.hpp"

namespace monoidgeom {

namespace {

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Moves the nonzero entry of least absolute value in D[t.., t..] to (t, t).
bool place_pivot(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t t) {
  std::size_t bi = 0, bj = 0;
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!found || a < best) {
        best = a;
        bi = i;
        bj = j;
        found = true;
      }
    }
  if (!found) return false;
  d.swap_rows(t, bi);
  u.swap_rows(t, bi);
  d.swap_cols(t, bj);
  v.swap_cols(t, bj);
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& d = s.D;
  std::size_t t = 0;
  while (t < std::min(m, n) && place_pivot(d, s.U, s.V, t)) {
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        while (d(i, t) != 0) {
          Integer q = tdiv(d(i, t), d(t, t));
          d.add_row_multiple(i, t, -q);
          s.U.add_row_multiple(i, t, -q);
          if (d(i, t) != 0) {
            d.swap_rows(i, t);
            s.U.swap_rows(i, t);
            dirty = true;
          }
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        while (d(t, j) != 0) {
          Integer q = tdiv(d(t, j), d(t, t));
          d.add_col_multiple(j, t, -q);
          s.V.add_col_multiple(j, t, -q);
          if (d(t, j) != 0) {
            d.swap_cols(j, t);
            s.V.swap_cols(j, t);
            dirty = true;
          }
        }
      }
      if (dirty) continue;
      // Column swaps may have refilled column t.
      bool clean = true;
      for (std::size_t i = t + 1; i < m && clean; ++i) clean = d(i, t) == 0;
      if (!clean) continue;
      // Divisibility of the remaining block by the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            s.U.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HermiteForm h{a, IntMatrix::identity(m), 0};
  IntMatrix& H = h.H;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, c) != 0 && (best == m || abs(H(i, c)) < abs(H(best, c)))) best = i;
      if (best == m) break;
      H.swap_rows(r, best);
      h.W.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Integer q = tdiv(H(i, c), H(r, c));
        H.add_row_multiple(i, r, -q);
        h.W.add_row_multiple(i, r, -q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      h.W.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(H(i, c), H(r, c));
      H.add_row_multiple(i, r, -q);
      h.W.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  h.rank = r;
  return h;
}

namespace {

std::vector<Vector> nonzero_hermite_rows(const std::vector<Vector>& rows, std::size_t n) {
  if (rows.empty()) return {};
  HermiteForm h = hermite_normal_form(IntMatrix::from_rows(rows, n));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < h.rank; ++i) out.push_back(h.H.row(i));
  return out;
}

}  // namespace

std::vector<Vector> integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  SmithForm s = smith_normal_form(a);
  std::vector<Vector> basis;
  for (std::size_t j = s.rank; j < n; ++j) basis.push_back(s.V.col(j));
  return nonzero_hermite_rows(basis, n);
}

std::optional<Vector> solve_integer(const IntMatrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw MonoidError(ErrorCode::DimensionMismatch, "solve_integer");
  const std::size_t n = a.cols();
  if (a.rows() == 0) return Vector(n);
  SmithForm s = smith_normal_form(a);
  Vector c = s.U.apply(b);
  Vector y(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

std::size_t rank(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return hermite_normal_form(a).rank;
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(IntMatrix::from_rows(rows, cols));
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw MonoidError(ErrorCode::DimensionMismatch, "determinant");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw MonoidError(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw MonoidError(ErrorCode::InvalidArgument, "singular matrix");
    std::swap(m[p], m[c]);
    Rational piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = m[i][n + j];
      if (x.get_den() != 1) throw MonoidError(ErrorCode::InvalidArgument, "matrix is not unimodular");
      inv(i, j) = x.get_num();
    }
  return inv;
}

std::vector<Vector> saturated_span(const std::vector<Vector>& vectors, std::size_t n) {
  std::vector<Vector> nonzero;
  for (const auto& v : vectors)
    if (!is_zero(v)) nonzero.push_back(v);
  if (nonzero.empty()) return {};
  auto normals = integer_kernel(IntMatrix::from_rows(nonzero, n));
  if (normals.empty()) return integer_kernel(IntMatrix(0, n));
  return integer_kernel(IntMatrix::from_rows(normals, n));
}

}  // namespace monoidgeom
