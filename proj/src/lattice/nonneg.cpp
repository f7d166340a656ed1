#include <map>
#include <set>
#include <tuple>

#include "monoidgeom/lattice.hpp"

namespace monoidgeom {

namespace {

struct Search {
  const AbelianGroup& group;
  std::vector<GroupElement> gens;
  std::vector<std::size_t> index;  // position in the caller's list
  const NonnegOptions& options;
  std::set<std::tuple<std::size_t, Vector, Integer>> dead;
  Vector counts;

  bool feasible(const GroupElement& residual) const {
    for (const auto& f : options.cone_functionals)
      if (dot(f, residual.free) < 0) return false;
    return true;
  }

  bool run(std::size_t i, const GroupElement& residual, const Integer& remaining) {
    if (residual == group.zero()) return true;
    if (i == gens.size() || remaining == 0) return false;
    auto key = std::make_tuple(i, residual.flat(), remaining);
    if (dead.count(key)) return false;
    Integer cap = remaining;
    for (const auto& f : options.cone_functionals) {
      Integer fg = dot(f, gens[i].free);
      if (fg > 0) {
        Integer c = floor_div(dot(f, residual.free), fg);
        if (c < cap) cap = c;
      }
    }
    GroupElement r = residual;
    for (Integer c = 0; c <= cap; ++c) {
      if (feasible(r)) {
        counts[index[i]] = c;
        if (run(i + 1, r, remaining - c)) return true;
      }
      r = group.sub(r, gens[i]);
    }
    counts[index[i]] = 0;
    dead.insert(std::move(key));
    return false;
  }
};

}  // namespace

std::optional<Vector> solve_nonneg(const AbelianGroup& group, std::span<const GroupElement> gens,
                                   const GroupElement& target, const Integer& bound,
                                   const NonnegOptions& options) {
  group.check(target);
  Search s{group, {}, {}, options, {}, Vector(gens.size())};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    group.check(gens[i]);
    if (gens[i] == group.zero()) continue;
    s.gens.push_back(gens[i]);
    s.index.push_back(i);
  }
  if (bound < 0) return std::nullopt;
  if (!s.run(0, target, bound)) return std::nullopt;
  return s.counts;
}

}  // namespace monoidgeom
