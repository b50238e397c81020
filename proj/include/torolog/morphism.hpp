#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torolog/fan.hpp"
#include "torolog/points.hpp"

namespace torolog {

/// A toric morphism given by a lattice map nu: N1 -> N2 between fans of
/// monoids. nu_dual = nu^T maps M2 -> M1.
struct ToricMorphismData {
  IntMatrix nu;
  IntMatrix nu_dual;
  FanOfMonoids source;
  FanOfMonoids target;

  ToricMorphismData() = default;
  ToricMorphismData(IntMatrix nu, FanOfMonoids source, FanOfMonoids target);
};

struct ChartCheck {
  std::size_t source = 0;
  std::optional<std::size_t> target;  ///< minimal target cone containing nu(source cone)
  bool ok = false;
  std::string detail;
};

struct MorphismReport {
  bool rank_ok = true;
  std::vector<ChartCheck> charts;
  bool passed() const;
};

MorphismReport check_morphism(const ToricMorphismData& d);

/// Identity on Z^n from the atlas of saturate(g) to the atlas of g.
ToricMorphismData normalization_morphism(const ToricMonoid& g);

/// A monoid morphism domain -> codomain given by an integer matrix
/// (codomain rank x domain rank). Construction checks that every domain
/// generator lands in the codomain.
class MonoidMorphism {
 public:
  MonoidMorphism(IntMatrix matrix, ToricMonoid domain, ToricMonoid codomain);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  const ToricMonoid& domain() const noexcept { return domain_; }
  const ToricMonoid& codomain() const noexcept { return codomain_; }
  IntVector operator()(const IntVector& m) const { return matrix_ * m; }

 private:
  IntMatrix matrix_;
  ToricMonoid domain_;
  ToricMonoid codomain_;
};

/// outer ∘ inner; inner.codomain must equal outer.domain.
MonoidMorphism compose(const MonoidMorphism& outer, const MonoidMorphism& inner);

/// x |-> x ∘ mu, from X^codomain to X^domain.
ComplexPoint apply_to_point(const MonoidMorphism& mu, const ComplexPoint& p);

}  // namespace torolog
