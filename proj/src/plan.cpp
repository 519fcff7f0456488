#include "starpir/plan.hpp"

#include <map>
#include <sstream>

namespace starpir {

CapExceeded::CapExceeded(std::size_t b, std::size_t s, std::size_t cap)
    : BudgetExceeded("plan needs b = " + std::to_string(b) + " rows and s = " + std::to_string(s) +
                     " iterations, above the cap of " + std::to_string(cap)),
      b_(b),
      s_(s) {}

namespace {

std::string label(const IndexSet& s) { return "{" + s.to_string() + "}"; }

LinearCode star_dual_of(const LinearCode& star) {
  if (star.dimension() == star.length())
    throw PlanError(PlanFault::full_star_product,
                    "C * D is the whole space; no coordinates can be projected out");
  return dual(star);
}

void check_codes(const LinearCode& c, const LinearCode& d) {
  if (!(c.field() == d.field())) throw PlanError(PlanFault::shape, "C and D are over different fields");
  if (c.length() != d.length()) throw PlanError(PlanFault::shape, "C and D have different lengths");
}

// Checks conditions (i)-(iii) on the set collections and returns, for each
// J_gamma, an information set of (C * D)^perp containing it.
std::vector<IndexSet> check_sets(const LinearCode& c, const LinearCode& star_dual,
                                 const std::vector<IndexSet>& s_sets, const std::vector<IndexSet>& j_sets) {
  const std::size_t n = c.length();
  if (s_sets.empty()) throw PlanError(PlanFault::shape, "plan needs at least one S set");
  if (j_sets.empty()) throw PlanError(PlanFault::shape, "plan needs at least one J set");
  for (const auto& s : s_sets) s.check_within(n);
  for (const auto& j : j_sets) j.check_within(n);

  std::map<IndexSet, bool> s_ok;
  for (std::size_t beta = 0; beta < s_sets.size(); ++beta) {
    const IndexSet& s = s_sets[beta];
    auto [it, fresh] = s_ok.try_emplace(s, false);
    if (fresh) it->second = s.size() == c.dimension() && is_information_set(c, s);
    if (!it->second)
      throw PlanError(PlanFault::storage_set, "S_" + std::to_string(beta + 1) + " = " + label(s) +
                                                  " is not an information set of C");
  }

  std::map<IndexSet, std::optional<IndexSet>> j_ok;
  std::vector<IndexSet> containing;
  containing.reserve(j_sets.size());
  for (std::size_t gamma = 0; gamma < j_sets.size(); ++gamma) {
    const IndexSet& j = j_sets[gamma];
    auto [it, fresh] = j_ok.try_emplace(j);
    if (fresh) it->second = extend_to_information_set(star_dual, j);
    if (!it->second)
      throw PlanError(PlanFault::retrieval_set,
                      "J_" + std::to_string(gamma + 1) + " = " + label(j) +
                          " is not contained in an information set of (C * D)^perp");
    containing.push_back(*it->second);
  }

  std::vector<std::size_t> s_count(n, 0), j_count(n, 0);
  for (const auto& s : s_sets)
    for (auto j : s) ++s_count[j];
  for (const auto& js : j_sets)
    for (auto j : js) ++j_count[j];
  for (std::size_t j = 0; j < n; ++j)
    if (s_count[j] != j_count[j])
      throw PlanError(PlanFault::uneven_coverage,
                      "coordinate " + std::to_string(j + 1) + " lies in " + std::to_string(s_count[j]) +
                          " S sets but " + std::to_string(j_count[j]) + " J sets");
  return containing;
}

}  // namespace

RetrievalPlan RetrievalPlan::assemble(LinearCode c, LinearCode d, std::vector<IndexSet> s_sets,
                                      std::vector<IndexSet> j_sets,
                                      std::vector<std::vector<std::int32_t>> selector, std::string strategy) {
  check_codes(c, d);
  LinearCode star = star_product(c, d);
  LinearCode star_dual = star_dual_of(star);
  std::vector<IndexSet> containing = check_sets(c, star_dual, s_sets, j_sets);

  const std::size_t n = c.length();
  const std::size_t b = s_sets.size();
  if (selector.size() != j_sets.size())
    throw PlanError(PlanFault::shape, "expected one E matrix per J set");
  std::vector<std::uint8_t> hits(n * b, 0);
  for (std::size_t gamma = 0; gamma < selector.size(); ++gamma) {
    const auto& row = selector[gamma];
    if (row.size() != n) throw PlanError(PlanFault::shape, "E matrix has the wrong number of rows");
    const std::string where = "E_" + std::to_string(gamma + 1) + " row ";
    for (std::size_t j = 0; j < n; ++j) {
      const bool in_j = j_sets[gamma].contains(j);
      if (row[j] < 0) {
        if (in_j) throw PlanError(PlanFault::selection, where + std::to_string(j + 1) + " is zero but j is in J");
        continue;
      }
      if (!in_j) throw PlanError(PlanFault::selection, where + std::to_string(j + 1) + " is nonzero but j is not in J");
      const auto beta = static_cast<std::size_t>(row[j]);
      if (beta >= b || !s_sets[beta].contains(j))
        throw PlanError(PlanFault::selection,
                        where + std::to_string(j + 1) + " selects a row whose S set does not contain j");
      if (++hits[j * b + beta] > 1)
        throw PlanError(PlanFault::coverage, "(" + std::to_string(j + 1) + ", " + std::to_string(beta + 1) +
                                                 ") is selected more than once");
    }
  }
  for (std::size_t beta = 0; beta < b; ++beta)
    for (auto j : s_sets[beta])
      if (hits[j * b + beta] == 0)
        throw PlanError(PlanFault::coverage, "(" + std::to_string(j + 1) + ", " + std::to_string(beta + 1) +
                                                 ") is never selected");

  RetrievalPlan plan(std::move(c), std::move(d), std::move(star), std::move(star_dual));
  plan.s_sets_ = std::move(s_sets);
  plan.j_sets_ = std::move(j_sets);
  plan.containing_ = std::move(containing);
  plan.selector_ = std::move(selector);
  plan.strategy_ = std::move(strategy);
  return plan;
}

std::optional<std::size_t> RetrievalPlan::row_for(std::size_t gamma, std::size_t j) const {
  const std::int32_t beta = selector_.at(gamma).at(j);
  if (beta < 0) return std::nullopt;
  return static_cast<std::size_t>(beta);
}

Matrix RetrievalPlan::e_matrix(std::size_t gamma) const {
  Matrix e(c_.field(), n(), b());
  for (std::size_t j = 0; j < n(); ++j)
    if (auto beta = row_for(gamma, j)) e(j, *beta) = 1;
  return e;
}

Rational pir_rate(const RetrievalPlan& plan) {
  return Rational(static_cast<std::int64_t>(plan.b() * plan.k()),
                  static_cast<std::int64_t>(plan.n() * plan.s()));
}

std::vector<std::string> verify_plan(const RetrievalPlan& plan) {
  std::vector<std::string> problems;
  const LinearCode& c = plan.storage();
  const std::size_t n = plan.n(), b = plan.b();

  if (!(plan.star() == star_product(c, plan.retrieval()))) problems.push_back("stored C * D is wrong");
  if (!(plan.star_dual() == dual(plan.star()))) problems.push_back("stored (C * D)^perp is wrong");

  for (std::size_t beta = 0; beta < b; ++beta) {
    const IndexSet& s = plan.storage_sets()[beta];
    if (s.size() != c.dimension() || !is_information_set(c, s))
      problems.push_back("(i) fails for S_" + std::to_string(beta + 1));
  }
  for (std::size_t gamma = 0; gamma < plan.s(); ++gamma) {
    const IndexSet& j = plan.retrieval_sets()[gamma];
    const IndexSet& i = plan.containing_set(gamma);
    if (!j.is_subset_of(i) || i.size() != plan.star_dual().dimension() ||
        !is_information_set(plan.star_dual(), i))
      problems.push_back("(ii) fails for J_" + std::to_string(gamma + 1));
  }

  std::vector<std::size_t> s_count(n, 0), j_count(n, 0);
  for (const auto& s : plan.storage_sets())
    for (auto j : s) ++s_count[j];
  for (const auto& js : plan.retrieval_sets())
    for (auto j : js) ++j_count[j];
  for (std::size_t j = 0; j < n; ++j)
    if (s_count[j] != j_count[j]) problems.push_back("(iii) fails at coordinate " + std::to_string(j + 1));

  std::vector<std::size_t> hits(n * b, 0);
  for (std::size_t gamma = 0; gamma < plan.s(); ++gamma) {
    const Matrix e = plan.e_matrix(gamma);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ones = 0;
      for (std::size_t beta = 0; beta < b; ++beta) {
        if (e(j, beta) == 0) continue;
        if (e(j, beta) != 1) problems.push_back("E entry outside {0, 1}");
        ++ones;
        ++hits[j * b + beta];
      }
      if (ones != (plan.retrieval_sets()[gamma].contains(j) ? 1u : 0u))
        problems.push_back("E_" + std::to_string(gamma + 1) + " row " + std::to_string(j + 1) +
                           " is not a unit vector exactly on J");
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t beta = 0; beta < b; ++beta) {
      const std::size_t expected = plan.storage_sets()[beta].contains(j) ? 1 : 0;
      if (hits[j * b + beta] != expected) {
        std::ostringstream msg;
        msg << "coverage of (" << j + 1 << ", " << beta + 1 << ") is " << hits[j * b + beta] << ", expected "
            << expected;
        problems.push_back(msg.str());
      }
    }
  return problems;
}

RetrievalPlan plan_from_sets(const LinearCode& c, const LinearCode& d, std::vector<IndexSet> s_sets,
                             std::vector<IndexSet> j_sets, std::string strategy) {
  check_codes(c, d);
  const LinearCode star_dual = star_dual_of(star_product(c, d));
  check_sets(c, star_dual, s_sets, j_sets);

  // rows_of[j] lists the beta with j in S_beta in increasing order; the
  // smallest unused one is always the next in the list.
  const std::size_t n = c.length();
  std::vector<std::vector<std::int32_t>> rows_of(n);
  for (std::size_t beta = 0; beta < s_sets.size(); ++beta)
    for (auto j : s_sets[beta]) rows_of[j].push_back(static_cast<std::int32_t>(beta));
  std::vector<std::size_t> next(n, 0);

  std::vector<std::vector<std::int32_t>> selector(j_sets.size(), std::vector<std::int32_t>(n, -1));
  for (std::size_t gamma = 0; gamma < j_sets.size(); ++gamma)
    for (auto j : j_sets[gamma]) {
      if (next[j] == rows_of[j].size())
        throw PlanError(PlanFault::coverage, "no unused row left for coordinate " + std::to_string(j + 1));
      selector[gamma][j] = rows_of[j][next[j]++];
    }
  return RetrievalPlan::assemble(c, d, std::move(s_sets), std::move(j_sets), std::move(selector),
                                 std::move(strategy));
}

}  // namespace starpir
