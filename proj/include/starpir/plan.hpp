#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starpir/errors.hpp"
#include "starpir/index_set.hpp"
#include "starpir/linear_code.hpp"
#include "starpir/rational.hpp"

namespace starpir {

/// Which structural requirement of a retrieval plan failed.
enum class PlanFault {
  shape,                 // sizes, lengths or fields disagree
  full_star_product,     // C * D is the whole space
  storage_set,           // some S_beta is not an information set of C
  retrieval_set,         // some J_gamma is not inside an information set of (C * D)^perp
  uneven_coverage,       // a coordinate lies in a different number of S and J sets
  selection,             // E row for j does not match membership of j in J_gamma or S_beta
  coverage,              // some (j, beta) with j in S_beta is hit zero or several times
};

class PlanError : public ValidationError {
 public:
  PlanError(PlanFault fault, const std::string& what) : ValidationError(what), fault_(fault) {}
  PlanFault fault() const { return fault_; }

 private:
  PlanFault fault_;
};

/// A builder's plan would have more rows or iterations than allowed.
class CapExceeded : public BudgetExceeded {
 public:
  CapExceeded(std::size_t b, std::size_t s, std::size_t cap);
  std::size_t rows() const { return b_; }
  std::size_t iterations() const { return s_; }

 private:
  std::size_t b_;
  std::size_t s_;
};

/// The data of a (D, E)-retrieval scheme for storage code C: row sets
/// S_0..S_{b-1}, iteration sets J_0..J_{s-1} and the E matrices.
///
/// E is held as a selector: `row_for(gamma, j)` is the row beta with
/// E^(gamma)_{j, beta} = 1, or nullopt when row j of E^(gamma) is zero.
/// A plan can only be obtained through `assemble`, which checks every
/// condition, so holders may rely on them.
class RetrievalPlan {
 public:
  /// `selector[gamma][j]` is beta, or -1 for j outside J_gamma.
  static RetrievalPlan assemble(LinearCode c, LinearCode d, std::vector<IndexSet> s_sets,
                                std::vector<IndexSet> j_sets,
                                std::vector<std::vector<std::int32_t>> selector,
                                std::string strategy = "explicit");

  const LinearCode& storage() const { return c_; }
  const LinearCode& retrieval() const { return d_; }
  const LinearCode& star() const { return star_; }
  /// (C * D)^perp; its generator is the projection matrix H.
  const LinearCode& star_dual() const { return star_dual_; }

  std::size_t n() const { return c_.length(); }
  std::size_t k() const { return c_.dimension(); }
  std::size_t b() const { return s_sets_.size(); }
  std::size_t s() const { return j_sets_.size(); }

  const std::vector<IndexSet>& storage_sets() const { return s_sets_; }
  const std::vector<IndexSet>& retrieval_sets() const { return j_sets_; }
  /// Information set of (C * D)^perp containing J_gamma.
  const IndexSet& containing_set(std::size_t gamma) const { return containing_[gamma]; }
  std::optional<std::size_t> row_for(std::size_t gamma, std::size_t j) const;
  /// n x b zero/one matrix E^(gamma).
  Matrix e_matrix(std::size_t gamma) const;

  const std::string& strategy() const { return strategy_; }

 private:
  RetrievalPlan(LinearCode c, LinearCode d, LinearCode star, LinearCode star_dual)
      : c_(std::move(c)), d_(std::move(d)), star_(std::move(star)), star_dual_(std::move(star_dual)) {}

  LinearCode c_, d_, star_, star_dual_;
  std::vector<IndexSet> s_sets_;
  std::vector<IndexSet> j_sets_;
  std::vector<IndexSet> containing_;
  std::vector<std::vector<std::int32_t>> selector_;
  std::string strategy_;
};

/// b k / (n s) in lowest terms.
Rational pir_rate(const RetrievalPlan& plan);

/// Every condition a plan must satisfy, recomputed from the public
/// accessors and the materialised E matrices. Empty when the plan is sound;
/// otherwise one message per failure.
std::vector<std::string> verify_plan(const RetrievalPlan& plan);

/// Builds E with the smallest-index rule: in iteration gamma each j in
/// J_gamma takes the smallest beta with j in S_beta not yet used for j.
/// Conditions on the sets are checked first, each with its own PlanFault.
RetrievalPlan plan_from_sets(const LinearCode& c, const LinearCode& d, std::vector<IndexSet> s_sets,
                             std::vector<IndexSet> j_sets, std::string strategy = "sets");

}  // namespace starpir
