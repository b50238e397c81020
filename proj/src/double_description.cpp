#include "double_description.hpp"

#include <algorithm>
#include <set>

namespace torolog::detail {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// alpha * x + beta * y, made primitive.
IntVector combine(const Integer& alpha, const IntVector& x, const Integer& beta,
                  const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i] + beta * y[i];
  return primitive(out);
}

}  // namespace

GeneratorSystem double_description(std::size_t dim,
                                   const std::vector<IntVector>& inequalities) {
  GeneratorSystem g;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim);
    e[i] = 1;
    g.lineality.push_back(std::move(e));
  }
  std::vector<IntVector> processed;

  for (const IntVector& a : inequalities) {
    if (is_zero(a)) continue;

    auto pivot = std::find_if(g.lineality.begin(), g.lineality.end(),
                              [&](const IntVector& l) { return dot(a, l) != 0; });
    if (pivot != g.lineality.end()) {
      // The new halfspace cuts the lineality space: one line turns into a ray.
      IntVector l0 = *pivot;
      g.lineality.erase(pivot);
      Integer a0 = dot(a, l0);
      if (a0 < 0) {
        for (auto& x : l0) x = -x;
        a0 = -a0;
      }
      for (auto& l : g.lineality) {
        const Integer al = dot(a, l);
        if (al != 0) l = combine(a0, l, -al, l0);
      }
      for (auto& r : g.rays) {
        const Integer ar = dot(a, r);
        if (ar != 0) r = combine(a0, r, -ar, l0);
      }
      g.rays.push_back(primitive(l0));
      processed.push_back(a);
      continue;
    }

    std::vector<IntVector> pos, zero, neg;
    std::vector<Integer> pos_val, neg_val;
    for (auto& r : g.rays) {
      const Integer v = dot(a, r);
      if (v > 0) {
        pos.push_back(r);
        pos_val.push_back(v);
      } else if (v < 0) {
        neg.push_back(r);
        neg_val.push_back(v);
      } else {
        zero.push_back(r);
      }
    }
    if (neg.empty()) {
      processed.push_back(a);
      continue;
    }

    std::vector<IntVector> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    // Two rays are adjacent iff their common tight constraints cut out a
    // two-dimensional face modulo the lineality space.
    const std::size_t target =
        dim >= g.lineality.size() + 2 ? dim - g.lineality.size() - 2 : 0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = 0; j < neg.size(); ++j) {
        std::vector<IntVector> tight;
        for (const auto& b : processed)
          if (dot(b, pos[i]) == 0 && dot(b, neg[j]) == 0) tight.push_back(b);
        if (tight.size() < target) continue;
        if (rank_of(tight, dim) != target) continue;
        next.push_back(combine(pos_val[i], neg[j], -neg_val[j], pos[i]));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    g.rays = std::move(next);
    processed.push_back(a);
  }

  std::sort(g.rays.begin(), g.rays.end());
  g.rays.erase(std::unique(g.rays.begin(), g.rays.end()), g.rays.end());
  return g;
}

}  // namespace torolog::detail
