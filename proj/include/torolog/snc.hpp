#pragma once

#include <optional>
#include <vector>

#include "torolog/rounding.hpp"

namespace torolog {

struct Simplex {
  std::vector<std::size_t> vertices;  ///< sorted
  std::optional<std::size_t> id;      ///< tells apart strata on the same vertex set
};

/// Dual complex of an SNC divisor in an n-dimensional manifold.
class DualComplex {
 public:
  DualComplex() = default;
  /// Validates; with `complete`, missing faces of given simplices are added
  /// instead of rejected. Throws InvalidComplex.
  DualComplex(std::size_t n, std::size_t vertex_count, std::vector<Simplex> simplices,
              std::optional<std::vector<Integer>> multiplicities = std::nullopt,
              bool complete = false);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return vertices_; }
  /// By size, then vertex list, then id.
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  const std::optional<std::vector<Integer>>& multiplicities() const noexcept { return mult_; }

 private:
  std::size_t n_ = 0;
  std::size_t vertices_ = 0;
  std::vector<Simplex> simplices_;
  std::optional<std::vector<Integer>> mult_;
};

struct StratumRow {
  Simplex simplex;
  std::size_t depth = 0;  ///< number of components meeting
  std::size_t stratum_dim = 0;
  FiberReport link;
  std::optional<FiberReport> milnor;
};

struct DepthSummary {
  std::size_t depth = 0;
  std::size_t strata = 0;
  Integer components = 0;  ///< summed over strata of this depth
};

std::vector<StratumRow> link_report(const DualComplex& dc);

struct MilnorReport {
  std::vector<StratumRow> rows;
  std::vector<DepthSummary> summary;
};

/// Throws MissingMultiplicities when the complex carries none.
MilnorReport milnor_report(const DualComplex& dc);

}  // namespace torolog
