#pragma once

// Exact integer and rational linear algebra.
//
// Convention: lattice morphisms act on column vectors. A list of lattice
// vectors is packed into a matrix column by column, so a generator list
// g_1..g_k in Z^d becomes a d x k matrix.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace torolog {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, std::span<const IntVector> rows);
  static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> columns() const;
  IntMatrix transpose() const;
  /// Keeps the listed columns, in the given order.
  IntMatrix select_columns(std::span<const std::size_t> which) const;
  bool is_zero() const;

  // Elementary operations used by the normal-form algorithms.
  void swap_columns(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);
  /// column dst += k * column src
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// row dst += k * row src
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_column(std::size_t c);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

/// Bareiss fraction-free determinant of a square matrix.
Integer determinant(const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;  ///< column-style HNF, zero columns last
  IntMatrix u;  ///< unimodular, m * u == h
};

/// Column Hermite normal form. Pivots are positive; entries to the left of a
/// pivot lie in [0, pivot).
HermiteForm hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix s;  ///< diagonal, d1 | d2 | ..., nonnegative
  IntMatrix u;  ///< unimodular rows x rows
  IntMatrix v;  ///< unimodular cols x cols, u * m * v == s
};

SmithForm snf(const IntMatrix& m);

struct AbelianGroupInvariants {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  ///< invariant factors > 1, each dividing the next

  /// Order of the torsion subgroup.
  Integer torsion_order() const;
  std::string to_string() const;

  friend bool operator==(const AbelianGroupInvariants&,
                         const AbelianGroupInvariants&) = default;
};

/// Invariants of Z^ambient_rank / <columns of sub_generators>.
AbelianGroupInvariants quotient_invariants(std::size_t ambient_rank,
                                           const IntMatrix& sub_generators);

/// The canonical pairing N x M -> Z: sum of w_i * m_i.
Integer pairing(std::span<const Integer> w, std::span<const Integer> m);

/// v divided by the gcd of its entries. Throws on the zero vector.
IntVector primitive(const IntVector& v);

Integer content(std::span<const Integer> v);
bool is_zero(std::span<const Integer> v);

std::size_t rank(const IntMatrix& m);
std::size_t rank_of(std::span<const IntVector> vectors, std::size_t dim);

/// Lattice basis (as columns) of the subgroup generated by the columns of m:
/// the nonzero columns of its HNF.
IntMatrix lattice_basis(const IntMatrix& m);

/// Lattice basis (as columns) of the integer kernel {x in Z^cols : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// Some integer x with gens * x == v, if one exists.
std::optional<IntVector> lattice_coordinates(const IntMatrix& gens, const IntVector& v);

/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

// --- rational helpers --------------------------------------------------

using RatMatrix = std::vector<RatVector>;  // row-major

RatVector to_rational(std::span<const Integer> v);
/// Smallest positive integer multiple of v, made primitive.
IntVector clear_denominators(std::span<const Rational> v);
/// Inverse of a square rational matrix, if invertible.
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Canonical basis of span(vectors): reduced row echelon rows scaled to
/// primitive integer vectors.
std::vector<IntVector> canonical_span_basis(std::span<const IntVector> vectors,
                                            std::size_t dim);
/// Orthogonal projection of v onto the complement of span(basis), rescaled to
/// a primitive integer vector. Returns the zero vector if v lies in the span.
IntVector project_out(const IntVector& v, std::span<const IntVector> basis);

std::string to_string(std::span<const Integer> v);

}  // namespace torolog
