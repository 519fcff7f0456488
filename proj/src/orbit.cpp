#include "starpir/orbit.hpp"

#include <string>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "starpir/errors.hpp"

namespace starpir {

std::size_t PermutationGroupSpec::degree() const {
  if (generators.empty()) throw ValidationError("permutation group needs at least one generator");
  const std::size_t n = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != n) throw ValidationError("group generators act on different point counts");
  return n;
}

std::vector<std::size_t> point_orbit(const PermutationGroupSpec& g, std::size_t point) {
  const std::size_t n = g.degree();
  if (point >= n) throw ValidationError("point outside the permutation domain");
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> orbit = {point};
  seen[point] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& p : g.generators) {
      const std::size_t image = p(orbit[head]);
      if (!seen[image]) {
        seen[image] = true;
        orbit.push_back(image);
      }
    }
  }
  return orbit;
}

bool is_transitive(const PermutationGroupSpec& g) {
  return point_orbit(g, 0).size() == g.degree();
}

namespace {

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const {
    return boost::hash_range(s.begin(), s.end());
  }
};

}  // namespace

std::vector<IndexSet> set_orbit(const PermutationGroupSpec& g, const IndexSet& s,
                                std::size_t limit) {
  s.check_within(g.degree());
  std::unordered_set<IndexSet, IndexSetHash> seen = {s};
  std::vector<IndexSet> orbit = {s};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& p : g.generators) {
      IndexSet image = p.apply(orbit[head]);
      if (seen.insert(image).second) {
        orbit.push_back(std::move(image));
        if (orbit.size() > limit)
          throw BudgetExceeded("set orbit exceeds " + std::to_string(limit) + " sets");
      }
    }
  }
  return orbit;
}

}  // namespace starpir
