#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torolog/cone.hpp"
#include "torolog/lattice.hpp"

namespace torolog {

/// A finitely generated submonoid of Z^d, given by generators.
///
/// Zero and repeated generators are dropped at construction; the remaining
/// generators keep their input order, and face descriptors refer to indices
/// into that list. The exponent cone and the HNF basis of the generated group
/// are computed once at construction.
class ToricMonoid {
 public:
  ToricMonoid() = default;
  ToricMonoid(std::size_t ambient_rank, std::vector<IntVector> generators);

  /// N^n with the standard basis as generators.
  static ToricMonoid free_monoid(std::size_t n);
  /// Z^n, generated by +-e_i.
  static ToricMonoid lattice(std::size_t n);

  std::size_t ambient_rank() const noexcept { return n_; }
  const std::vector<IntVector>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  /// R>=0 * generators.
  const RationalCone& exponent_cone() const noexcept { return cone_; }
  /// Dual of the exponent cone.
  RationalCone weight_cone() const { return cone_.dual(); }
  /// HNF lattice basis (columns) of the group generated by the monoid.
  const IntMatrix& gp() const noexcept { return gp_; }
  std::size_t gp_rank() const noexcept { return gp_.cols(); }
  /// Generators as the columns of an ambient_rank x size() matrix.
  IntMatrix generator_matrix() const;

  std::string to_string() const;

  friend bool operator==(const ToricMonoid& a, const ToricMonoid& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<IntVector> gens_;
  RationalCone cone_;
  IntMatrix gp_;
};

/// A face, recorded by the indices of the parent generators lying on it.
/// A face containing no generator is the trivial face {0}.
struct MonoidFace {
  std::vector<std::size_t> indices;  ///< sorted
  ToricMonoid monoid;

  friend bool operator==(const MonoidFace& a, const MonoidFace& b) {
    return a.indices == b.indices;
  }
};

struct PrimeIdeal {
  MonoidFace face;                      ///< the prime is the complement of this face
  std::vector<std::size_t> complement;  ///< generator indices outside the face
};

/// A ghost element: coordinates in M / Phi^gp ~ Z^rank + (+)_i Z/d_i.
struct GhostElement {
  IntVector free;
  IntVector torsion;  ///< entry i reduced into [0, d_i)

  bool is_zero() const;
  friend bool operator==(const GhostElement&, const GhostElement&) = default;
};

/// The sharp quotient Gamma/Phi at a face, with the invariants of
/// M / Phi^gp where M is the group generated by Gamma.
struct GhostReport {
  MonoidFace face;
  AbelianGroupInvariants quotient_invariants;
  std::size_t face_rank = 0;  ///< rank of Phi^gp
  std::vector<GhostElement> sharp_generators;

  // Quotient map M -> M/Phi^gp in coordinates of the gp() basis.
  IntMatrix projection;
  std::size_t pivot_count = 0;
  std::vector<Integer> moduli;

  /// Image of m in M/Phi^gp; m must lie in the group generated by Gamma.
  GhostElement image(const ToricMonoid& g, const IntVector& m) const;
};

/// Witness coefficients (one per generator) when m is in the monoid.
std::optional<IntVector> membership(const ToricMonoid& g, const IntVector& m);
bool contains(const ToricMonoid& g, const IntVector& m);
bool monoid_equal(const ToricMonoid& a, const ToricMonoid& b);

/// The subgroup of units, as the minimal face.
MonoidFace edge(const ToricMonoid& g);
/// All faces, in the order of the corresponding exponent-cone faces.
std::vector<MonoidFace> faces(const ToricMonoid& g);
std::vector<PrimeIdeal> prime_ideals(const ToricMonoid& g);
/// The face with exactly these generator indices; throws NotAFace otherwise.
MonoidFace face_from_indices(const ToricMonoid& g, std::vector<std::size_t> indices);
bool is_face(const ToricMonoid& g, const MonoidFace& f);
/// The cone face R>=0 * Phi.
RationalCone face_cone(const ToricMonoid& g, const MonoidFace& f);
/// m lies in Gamma and in the linear span of the face.
bool face_contains(const ToricMonoid& g, const MonoidFace& f, const IntVector& m);

bool saturation_membership(const ToricMonoid& g, const IntVector& m);
/// Minimal generators of lattice ∩ c modulo units; the unit lattice
/// contributes +-basis vectors. `lattice` holds basis vectors as columns.
std::vector<IntVector> hilbert_basis(const RationalCone& c, const IntMatrix& lattice);
ToricMonoid saturate(const ToricMonoid& g);
bool is_saturated(const ToricMonoid& g);

/// Gamma + Phi^gp.
ToricMonoid localize(const ToricMonoid& g, const MonoidFace& f);
GhostReport ghost(const ToricMonoid& g, const MonoidFace& f);

/// Coordinates of m in the gp() basis; throws if m is outside the group.
IntVector gp_coordinates(const ToricMonoid& g, const IntVector& m);

}  // namespace torolog
