#include "torolog/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "torolog/error.hpp"

namespace torolog {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::ZeroVector: return "zero-vector";
    case ErrorCode::NotAFace: return "not-a-face";
    case ErrorCode::NotInMonoid: return "not-in-monoid";
    case ErrorCode::RelationViolated: return "relation-violated";
    case ErrorCode::InvalidFan: return "invalid-fan";
    case ErrorCode::NotAMorphism: return "not-a-morphism";
    case ErrorCode::InvalidComplex: return "invalid-complex";
    case ErrorCode::MissingMultiplicities: return "missing-multiplicities";
    case ErrorCode::InvalidInput: return "invalid-input";
  }
  return "unknown";
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, std::span<const IntVector> rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const IntVector> cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw Error(ErrorCode::DimensionMismatch, "matrix column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> which) const {
  IntMatrix out(rows_, which.size());
  for (std::size_t j = 0; j < which.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, which[j]);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) /= prev;  // exact by Sylvester's identity
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  std::size_t pc = 0;
  for (std::size_t r = 0; r < h.rows() && pc < h.cols(); ++r) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t j = pc; j < h.cols(); ++j) {
        if (h(r, j) == 0) continue;
        if (!best || abs(h(r, j)) < abs(h(r, *best))) best = j;
      }
      if (!best) break;
      h.swap_columns(pc, *best);
      u.swap_columns(pc, *best);
      bool reduced = true;
      for (std::size_t j = pc + 1; j < h.cols(); ++j) {
        if (h(r, j) == 0) continue;
        const Integer q = floor_div(h(r, j), h(r, pc));
        h.add_column_multiple(j, pc, -q);
        u.add_column_multiple(j, pc, -q);
        if (h(r, j) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h(r, pc) == 0) continue;
    if (h(r, pc) < 0) {
      h.negate_column(pc);
      u.negate_column(pc);
    }
    for (std::size_t j = 0; j < pc; ++j) {
      const Integer q = floor_div(h(r, j), h(r, pc));
      h.add_column_multiple(j, pc, -q);
      u.add_column_multiple(j, pc, -q);
    }
    ++pc;
  }
  return {std::move(h), std::move(u)};
}

SmithForm snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    bool empty = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
          if (s(i, j) == 0) continue;
          if (!best || abs(s(i, j)) < abs(s(best->first, best->second))) best = {{i, j}};
        }
      if (!best) {
        empty = true;
        break;
      }
      s.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      s.swap_columns(t, best->second);
      v.swap_columns(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        const Integer q = floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        const Integer q = floor_div(s(t, j), s(t, t));
        s.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < s.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (s(i, j) % s(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      s.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }
    if (empty) break;
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

Integer AbelianGroupInvariants::torsion_order() const {
  Integer order = 1;
  for (const auto& d : torsion) order *= d;
  return order;
}

std::string AbelianGroupInvariants::to_string() const {
  std::ostringstream os;
  os << "Z^" << rank;
  for (const auto& d : torsion) os << " + Z/" << d.get_str();
  return os.str();
}

AbelianGroupInvariants quotient_invariants(std::size_t ambient_rank,
                                           const IntMatrix& sub_generators) {
  if (sub_generators.rows() != ambient_rank)
    throw Error(ErrorCode::DimensionMismatch,
                "subgroup generators do not live in the ambient lattice");
  const SmithForm f = snf(sub_generators);
  AbelianGroupInvariants out;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(f.s.rows(), f.s.cols()); ++i) {
    if (f.s(i, i) == 0) continue;
    ++nonzero;
    if (f.s(i, i) > 1) out.torsion.push_back(f.s(i, i));
  }
  out.rank = ambient_rank - nonzero;
  return out;
}

Integer pairing(std::span<const Integer> w, std::span<const Integer> m) {
  if (w.size() != m.size())
    throw Error(ErrorCode::DimensionMismatch, "pairing of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * m[i];
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector primitive(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive vector of zero requested");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

std::size_t rank(const IntMatrix& m) {
  const HermiteForm f = hnf(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < f.h.cols(); ++c) {
    bool zero = true;
    for (std::size_t i = 0; i < f.h.rows() && zero; ++i) zero = f.h(i, c) == 0;
    if (!zero) ++r;
  }
  return r;
}

std::size_t rank_of(std::span<const IntVector> vectors, std::size_t dim) {
  RatMatrix a;
  a.reserve(vectors.size());
  for (const auto& v : vectors) a.push_back(to_rational(v));
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < dim; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

IntMatrix lattice_basis(const IntMatrix& m) {
  const HermiteForm f = hnf(m);
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < f.h.cols(); ++c) {
    bool zero = true;
    for (std::size_t i = 0; i < f.h.rows() && zero; ++i) zero = f.h(i, c) == 0;
    if (!zero) keep.push_back(c);
  }
  return f.h.select_columns(keep);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const HermiteForm f = hnf(m);
  std::vector<std::size_t> zero_cols;
  for (std::size_t c = 0; c < f.h.cols(); ++c) {
    bool zero = true;
    for (std::size_t i = 0; i < f.h.rows() && zero; ++i) zero = f.h(i, c) == 0;
    if (zero) zero_cols.push_back(c);
  }
  return f.u.select_columns(zero_cols);
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& gens, const IntVector& v) {
  if (v.size() != gens.rows())
    throw Error(ErrorCode::DimensionMismatch, "vector does not match generator rows");
  const HermiteForm f = hnf(gens);
  IntVector y(gens.cols());
  IntVector residual = v;
  // Columns of h are in echelon form: solve pivot by pivot.
  std::size_t row = 0;
  for (std::size_t c = 0; c < f.h.cols(); ++c) {
    while (row < f.h.rows() && f.h(row, c) == 0) {
      if (residual[row] != 0) return std::nullopt;
      ++row;
    }
    if (row == f.h.rows()) break;
    if (residual[row] % f.h(row, c) != 0) return std::nullopt;
    y[c] = residual[row] / f.h(row, c);
    for (std::size_t i = row; i < f.h.rows(); ++i) residual[i] -= y[c] * f.h(i, c);
    ++row;
  }
  if (!is_zero(residual)) return std::nullopt;
  return f.u * y;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const HermiteForm f = hnf(u);
  if (f.h != IntMatrix::identity(u.rows()))
    throw Error(ErrorCode::InvalidInput, "matrix is not unimodular");
  return f.u;
}

RatVector to_rational(std::span<const Integer> v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVector clear_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  if (is_zero(out)) return out;
  return primitive(out);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    std::swap(inv[c], inv[p]);
    const Rational piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

std::vector<IntVector> canonical_span_basis(std::span<const IntVector> vectors,
                                            std::size_t dim) {
  RatMatrix a;
  for (const auto& v : vectors) a.push_back(to_rational(v));
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const Rational piv = a[r][c];
    for (auto& x : a[r]) x /= piv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < dim; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(clear_denominators(a[i]));
  return out;
}

IntVector project_out(const IntVector& v, std::span<const IntVector> basis) {
  if (basis.empty()) return is_zero(v) ? v : primitive(v);
  const std::size_t l = basis.size();
  RatMatrix gram(l, RatVector(l));
  RatVector rhs(l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) gram[i][j] = pairing(basis[i], basis[j]);
    rhs[i] = pairing(basis[i], v);
  }
  const auto ginv = inverse(gram);
  if (!ginv) throw Error(ErrorCode::InvalidInput, "projection basis is dependent");
  RatVector coef(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) coef[i] += (*ginv)[i][j] * rhs[j];
  RatVector out = to_rational(v);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < v.size(); ++k) out[k] -= coef[i] * basis[i][k];
  return clear_denominators(out);
}

std::string to_string(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace torolog
