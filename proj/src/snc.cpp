#include "torolog/snc.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torolog/error.hpp"

namespace torolog {

namespace {

using VertexSet = std::vector<std::size_t>;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidComplex, what); }

std::string show(const VertexSet& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

DualComplex::DualComplex(std::size_t n, std::size_t vertex_count, std::vector<Simplex> simplices,
                         std::optional<std::vector<Integer>> multiplicities, bool complete)
    : n_(n), vertices_(vertex_count), simplices_(std::move(simplices)), mult_(std::move(multiplicities)) {
  if (mult_) {
    if (mult_->size() != vertices_) invalid("need one multiplicity per vertex");
    for (const auto& m : *mult_)
      if (m < 1) invalid("multiplicities must be positive");
  }
  std::set<std::size_t> ids;
  std::map<VertexSet, std::vector<std::optional<std::size_t>>> by_set;
  for (auto& s : simplices_) {
    std::sort(s.vertices.begin(), s.vertices.end());
    if (s.vertices.empty()) invalid("empty simplex");
    if (std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
      invalid("repeated vertex in " + show(s.vertices));
    if (s.vertices.back() >= vertices_) invalid("vertex out of range in " + show(s.vertices));
    if (s.vertices.size() > n_) invalid("simplex " + show(s.vertices) + " exceeds the dimension");
    if (s.id && !ids.insert(*s.id).second) invalid("duplicate simplex id " + std::to_string(*s.id));
    by_set[s.vertices].push_back(s.id);
  }
  for (const auto& [set, list] : by_set)
    if (list.size() > 1)
      for (const auto& id : list)
        if (!id) invalid("simplex " + show(set) + " repeated without distinguishing ids");
  for (std::size_t v = 0; v < vertices_; ++v)
    if (!by_set.contains({v})) {
      if (!complete) invalid("vertex " + std::to_string(v) + " missing");
      by_set[{v}].push_back(std::nullopt);
      simplices_.push_back({{v}, std::nullopt});
    }
  // Subset closure: it suffices to check faces of codimension one.
  std::vector<VertexSet> queue;
  for (const auto& [set, list] : by_set) queue.push_back(set);
  while (!queue.empty()) {
    const VertexSet s = queue.back();
    queue.pop_back();
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      VertexSet t = s;
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
      if (by_set.contains(t)) continue;
      if (!complete) invalid("face " + show(t) + " of " + show(s) + " missing");
      by_set[t].push_back(std::nullopt);
      simplices_.push_back({t, std::nullopt});
      queue.push_back(t);
    }
  }
  std::sort(simplices_.begin(), simplices_.end(), [](const Simplex& a, const Simplex& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.id < b.id;
  });
}

std::vector<StratumRow> link_report(const DualComplex& dc) {
  std::map<std::size_t, FiberReport> by_depth;
  std::vector<StratumRow> rows;
  for (const auto& s : dc.simplices()) {
    const std::size_t k = s.vertices.size();
    if (!by_depth.contains(k)) {
      const ToricMonoid local = ToricMonoid::free_monoid(k);
      by_depth[k] = fiber_structure(local, face_from_indices(local, {}));
    }
    rows.push_back({s, k, dc.ambient_dim() - k, by_depth[k], std::nullopt});
  }
  return rows;
}

MilnorReport milnor_report(const DualComplex& dc) {
  if (!dc.multiplicities())
    throw Error(ErrorCode::MissingMultiplicities, "milnor report needs multiplicities");
  MilnorReport rep;
  rep.rows = link_report(dc);
  std::map<std::size_t, DepthSummary> sums;
  for (auto& row : rep.rows) {
    std::vector<Integer> m;
    for (auto v : row.simplex.vertices) m.push_back((*dc.multiplicities())[v]);
    row.milnor = milnor_stratum_fiber(m);
    auto& d = sums[row.depth];
    d.depth = row.depth;
    d.strata += 1;
    d.components += row.milnor->components;
  }
  for (auto& [k, d] : sums) rep.summary.push_back(d);
  return rep;
}

}  // namespace torolog
