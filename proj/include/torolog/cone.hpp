#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "torolog/lattice.hpp"

namespace torolog {

/// A rational polyhedral cone in Q^n, held in a canonical double description.
///
/// The cone is lineality() + cone(rays()) and also
/// {x : f.x >= 0 for f in facets(), e.x = 0 for e in equations()}.
/// Lineality and equation bases are reduced-echelon rows scaled to primitive
/// integers; rays are primitive, orthogonal to the lineality space and
/// lexicographically sorted; facets are primitive, orthogonal to the
/// equations and sorted. Two cones are equal as sets iff they compare equal.
class RationalCone {
 public:
  /// The zero cone {0} in Q^n.
  explicit RationalCone(std::size_t n = 0);

  /// Cone generated by arbitrary integer vectors (zero vectors ignored).
  static RationalCone from_generators(std::size_t n, const std::vector<IntVector>& gens);
  /// Cone generated by rays plus a linear subspace.
  static RationalCone from_generators(std::size_t n, const std::vector<IntVector>& lines,
                                      const std::vector<IntVector>& rays);
  /// {x : a.x >= 0 for a in inequalities, e.x = 0 for e in equations}.
  static RationalCone from_inequalities(std::size_t n,
                                        const std::vector<IntVector>& inequalities,
                                        const std::vector<IntVector>& equations = {});
  static RationalCone full_space(std::size_t n);

  std::size_t ambient_rank() const noexcept { return n_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const std::vector<IntVector>& lineality() const noexcept { return lineality_; }
  const std::vector<IntVector>& facets() const noexcept { return facets_; }
  const std::vector<IntVector>& equations() const noexcept { return equations_; }

  /// rays() together with +-lineality(); their nonnegative span is the cone.
  std::vector<IntVector> generators() const;

  std::size_t dim() const noexcept { return n_ - equations_.size(); }
  bool is_sharp() const noexcept { return lineality_.empty(); }

  bool contains(const IntVector& v) const;
  bool contains(const RatVector& v) const;
  /// Every generator of other lies in this cone.
  bool contains(const RationalCone& other) const;

  /// {m : w.m >= 0 for all w in this cone}.
  RationalCone dual() const;
  /// All faces, from the lineality space up to the cone itself, ordered by
  /// dimension and then by rays.
  std::vector<RationalCone> faces() const;
  RationalCone intersect(const RationalCone& other) const;
  bool is_face_of(const RationalCone& other) const;
  /// The minimal face (lineality space) as a cone.
  RationalCone edge() const;

  std::string to_string() const;

  friend bool operator==(const RationalCone&, const RationalCone&) = default;
  friend auto operator<=>(const RationalCone& a, const RationalCone& b) {
    if (a.dim() != b.dim()) return a.dim() <=> b.dim();
    if (a.lineality_ != b.lineality_) return a.lineality_ < b.lineality_
                                                 ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    if (a.rays_ != b.rays_)
      return a.rays_ < b.rays_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  RationalCone(std::size_t n, std::vector<IntVector> lineality, std::vector<IntVector> rays,
               std::vector<IntVector> equations, std::vector<IntVector> facets);
  static RationalCone build(std::size_t n, const std::vector<IntVector>& lines,
                            const std::vector<IntVector>& rays);

  std::size_t n_ = 0;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> equations_;
  std::vector<IntVector> facets_;
};

}  // namespace torolog
