#include <algorithm>
#include <map>
#include <set>

#include "monoidgeom/lattice.hpp"

namespace monoidgeom {

namespace {

std::vector<Vector> distinct_primitive(const std::vector<Vector>& rays) {
  std::set<Vector> seen;
  for (const auto& r : rays)
    if (!is_zero(r)) seen.insert(primitive(r));
  return {seen.begin(), seen.end()};
}

// Coordinates of vectors lying in the span of `basis` (rows of a lattice basis
// of a saturated sublattice).
std::vector<Vector> coordinates_in(const std::vector<Vector>& basis, const std::vector<Vector>& vs,
                                   std::size_t n) {
  IntMatrix bt = IntMatrix::from_rows(basis, n).transpose();
  std::vector<Vector> out;
  for (const auto& v : vs) {
    auto c = solve_integer(bt, v);
    if (!c) throw MonoidError(ErrorCode::InvalidArgument, "vector outside the lattice span");
    out.push_back(std::move(*c));
  }
  return out;
}

Vector from_coordinates(const std::vector<Vector>& basis, const Vector& c, std::size_t n) {
  Vector v(n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i] != 0) v = add(v, scale(basis[i], c[i]));
  return v;
}

bool in_facets(const std::vector<Vector>& facets, const Vector& v) {
  for (const auto& f : facets)
    if (dot(f, v) < 0) return false;
  return true;
}

// Facet normals of a full-dimensional cone; the rays are assumed distinct.
std::vector<Vector> full_facets(const std::vector<Vector>& rays, std::size_t d) {
  std::set<Vector> normals;
  if (d == 0) return {};
  const std::size_t k = rays.size();
  const std::size_t m = d - 1;
  if (k < m) return {};
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::set<Vector> tried;
  for (;;) {
    std::vector<Vector> sub;
    for (auto i : idx) sub.push_back(rays[i]);
    auto ker = integer_kernel(IntMatrix::from_rows(sub, d));
    if (ker.size() == 1) {
      Vector nrm = primitive(ker[0]);
      if (tried.insert(nrm).second) {
        bool pos = false, neg = false;
        for (const auto& r : rays) {
          Integer s = dot(nrm, r);
          if (s > 0) pos = true;
          if (s < 0) neg = true;
        }
        if (pos && !neg) normals.insert(nrm);
        if (neg && !pos) normals.insert(negate(nrm));
        tried.insert(negate(nrm));
      }
    }
    // next combination
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == k - m + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {normals.begin(), normals.end()};
}

// Rays of a (possibly lower dimensional) cone expressed in a basis of the
// saturated span, together with that basis.
struct SpanView {
  std::vector<Vector> basis;
  std::vector<Vector> coords;
  std::vector<Vector> facets;  // in span coordinates
};

SpanView span_view(const std::vector<Vector>& rays, std::size_t n) {
  SpanView s;
  s.basis = saturated_span(rays, n);
  if (s.basis.empty()) {
    s.coords.assign(rays.size(), Vector{});
    return s;
  }
  s.coords = coordinates_in(s.basis, rays, n);
  s.facets = full_facets(distinct_primitive(s.coords), s.basis.size());
  return s;
}

// Pulling triangulation of a pointed cone given by its extreme rays (indices
// into `rays`). Each simplex is a list of linearly independent ray indices.
void triangulate(const std::vector<Vector>& rays, std::size_t n, const std::vector<std::size_t>& subset,
                 std::vector<std::vector<std::size_t>>& out) {
  std::vector<Vector> sub;
  for (auto i : subset) sub.push_back(rays[i]);
  SpanView view = span_view(sub, n);
  if (subset.size() == view.basis.size()) {
    out.push_back(subset);
    return;
  }
  const Vector& apex = view.coords[0];
  for (const auto& f : view.facets) {
    if (dot(f, apex) == 0) continue;
    std::vector<std::size_t> face;
    for (std::size_t j = 0; j < subset.size(); ++j)
      if (dot(f, view.coords[j]) == 0) face.push_back(subset[j]);
    std::vector<std::vector<std::size_t>> part;
    triangulate(rays, n, face, part);
    for (auto& s : part) {
      s.insert(s.begin(), subset[0]);
      out.push_back(std::move(s));
    }
  }
}

// Lattice points of the half-open parallelepiped spanned by the rows of a
// nonsingular square matrix.
std::vector<Vector> parallelepiped_points(const IntMatrix& a) {
  const std::size_t d = a.rows();
  SmithForm s = smith_normal_form(a);
  IntMatrix v_inv = unimodular_inverse(s.V);
  // Rational inverse of a, for the coefficients of x in the ray basis.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = a(i, j);
    m[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    Rational piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * d; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Vector> points;
  Vector c(d);
  for (;;) {
    Vector x = v_inv.apply_left(c);
    // x - floor(lambda) * a, where x = lambda * a
    std::vector<Rational> lambda(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) lambda[i] += Rational(x[j]) * m[j][d + i];
    for (std::size_t i = 0; i < d; ++i) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), lambda[i].get_num_mpz_t(), lambda[i].get_den_mpz_t());
      if (fl != 0)
        for (std::size_t j = 0; j < d; ++j) x[j] -= fl * a(i, j);
    }
    points.push_back(std::move(x));
    std::size_t i = 0;
    while (i < d) {
      if (++c[i] < s.D(i, i)) break;
      c[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  return points;
}

std::vector<Vector> pointed_hilbert_basis(const std::vector<Vector>& rays, std::size_t d) {
  if (d == 0) return {};
  std::vector<Vector> facets = full_facets(rays, d);
  std::vector<Vector> ext;
  for (const auto& r : rays) {
    std::size_t zeros = 0;
    for (const auto& f : facets)
      if (dot(f, r) == 0) ++zeros;
    // Extreme iff the facets through r cut out a line.
    std::vector<Vector> through;
    for (const auto& f : facets)
      if (dot(f, r) == 0) through.push_back(f);
    if (d == 1 || (zeros >= d - 1 && rank(through, d) == d - 1)) ext.push_back(r);
  }
  std::vector<std::size_t> all(ext.size());
  for (std::size_t i = 0; i < ext.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> simplices;
  triangulate(ext, d, all, simplices);

  std::set<Vector> candidates(ext.begin(), ext.end());
  for (const auto& s : simplices) {
    std::vector<Vector> rows;
    for (auto i : s) rows.push_back(ext[i]);
    for (auto& p : parallelepiped_points(IntMatrix::from_rows(rows, d)))
      if (!is_zero(p)) candidates.insert(std::move(p));
  }
  std::vector<Vector> cand(candidates.begin(), candidates.end());
  std::vector<Vector> basis;
  for (const auto& x : cand) {
    bool reducible = false;
    for (const auto& y : cand) {
      if (y == x) continue;
      Vector diff = sub(x, y);
      if (!is_zero(diff) && in_facets(facets, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

}  // namespace

std::vector<Vector> cone_facets(const std::vector<Vector>& rays, std::size_t n) {
  return full_facets(distinct_primitive(rays), n);
}

bool cone_contains(const std::vector<Vector>& rays, const Vector& v, std::size_t n) {
  if (is_zero(v)) return true;
  auto r = distinct_primitive(rays);
  if (r.empty()) return false;
  SpanView view = span_view(r, n);
  IntMatrix bt = IntMatrix::from_rows(view.basis, n).transpose();
  // v must lie in the rational span; the saturated basis makes that integral.
  auto c = solve_integer(bt, v);
  if (!c) return false;
  return in_facets(view.facets, *c);
}

std::vector<Vector> extreme_rays(const std::vector<Vector>& rays, std::size_t n) {
  auto r = distinct_primitive(rays);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (j != i) others.push_back(r[j]);
    if (!cone_contains(others, r[i], n)) out.push_back(r[i]);
  }
  return out;
}

std::vector<Vector> hilbert_basis(const std::vector<Vector>& rays, std::size_t n, const HilbertOptions& options) {
  auto r = distinct_primitive(rays);
  if (r.empty()) return {};
  std::vector<Vector> basis = saturated_span(r, n);
  const std::size_t d = basis.size();
  if (d > options.max_dimension)
    throw MonoidError(ErrorCode::DimensionLimit,
                      "cone of dimension " + std::to_string(d) + " exceeds the limit " +
                          std::to_string(options.max_dimension));
  std::vector<Vector> coords = coordinates_in(basis, r, n);
  std::vector<Vector> facets = full_facets(coords, d);
  std::vector<Vector> lineality =
      facets.empty() ? integer_kernel(IntMatrix(0, d)) : integer_kernel(IntMatrix::from_rows(facets, d));

  std::set<Vector> out;
  if (lineality.empty()) {
    for (const auto& h : pointed_hilbert_basis(coords, d)) out.insert(from_coordinates(basis, h, n));
  } else {
    for (const auto& l : lineality) {
      out.insert(from_coordinates(basis, l, n));
      out.insert(from_coordinates(basis, negate(l), n));
    }
    Cokernel q(lineality, d);
    const std::size_t e = q.group().free_rank();
    std::vector<Vector> projected;
    for (const auto& c : coords) {
      Vector p = q.project(c).free;
      if (!is_zero(p)) projected.push_back(p);
    }
    for (const auto& h : pointed_hilbert_basis(distinct_primitive(projected), e)) {
      Vector lifted = q.lift(AbelianGroup(e).element(h));
      out.insert(from_coordinates(basis, lifted, n));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Vector> hilbert_basis_of_inequalities(const std::vector<Vector>& inequalities, std::size_t n,
                                                  const HilbertOptions& options) {
  if (rank(inequalities, n) != n)
    throw MonoidError(ErrorCode::InvalidArgument, "inequalities do not define a pointed cone");
  return hilbert_basis(cone_facets(inequalities, n), n, options);
}

}  // namespace monoidgeom
