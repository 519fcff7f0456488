#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starpir/orbit.hpp"
#include "starpir/plan.hpp"

namespace starpir {

inline constexpr std::size_t kDefaultPlanCap = 4096;

/// Rotating-window plan with c = d(C * D) - 1 downloads per iteration.
///
/// Write c = g k + r with 0 <= r < k. Each iteration downloads g whole
/// disjoint information sets T_0..T_{g-1} plus a window of r positions in a
/// further disjoint information set T_g. With a = gcd(r, k),
/// s = lcm(r, k) / r and b = g s + lcm(r, k) / k, in iteration gamma the
/// window row beta covers positions a(gamma + beta) .. a(gamma + beta) + a - 1
/// (mod k) of the sorted T_g. When r = 0 the plan has s = 1 and b = g.
RetrievalPlan plan_basic(const LinearCode& c, const LinearCode& d,
                         std::uint64_t budget = kDefaultCodewordBudget, std::size_t cap = kDefaultPlanCap);

/// J sets are all c-subsets of s (c = dim (C * D)^perp) in lexicographic
/// order and the S list is C(k-1, c-1) copies of s.
RetrievalPlan plan_symmetric(const LinearCode& c, const LinearCode& d, const IndexSet& s,
                             std::size_t cap = kDefaultPlanCap);

/// J sets are the |s| cyclic shifts of j along the sorted positions of s;
/// the S list is |j| copies of s.
RetrievalPlan plan_cyclic(const LinearCode& c, const LinearCode& d, const IndexSet& s, const IndexSet& j);

/// First subset j of s, in lexicographic order of positions, with
/// |j| = dim (C * D)^perp whose cyclic shifts inside s are all independent
/// in (C * D)^perp. Gives up after `candidate_limit` subsets.
std::optional<IndexSet> find_cyclic(const LinearCode& c, const LinearCode& d, const IndexSet& s,
                                    std::uint64_t candidate_limit = std::uint64_t{1} << 20);

/// Orbit plan: S list = alpha copies of the orbit of s under g, J list =
/// beta copies of the orbit of j under h, with alpha and beta the smallest
/// multiplicities giving every coordinate the same coverage on both sides.
/// s must be an information set of C and j must lie inside one of
/// (C * D)^perp; with j a full information set the rate is
/// dim (C * D)^perp / n. Throws CapExceeded, carrying b and s, before
/// building anything too big.
RetrievalPlan plan_orbit(const LinearCode& c, const LinearCode& d, const IndexSet& s, const IndexSet& j,
                         const PermutationGroupSpec& g, const PermutationGroupSpec& h,
                         std::size_t cap = kDefaultPlanCap);

enum class LadderStage { cyclic, translation_orbit, affine_orbit, basic };

std::string to_string(LadderStage stage);

struct LadderOptions {
  std::size_t cap = kDefaultPlanCap;
  std::vector<LadderStage> stages = {LadderStage::cyclic, LadderStage::translation_orbit,
                                     LadderStage::affine_orbit};
  /// Distinct information sets of C tried by the cyclic stage.
  std::size_t cyclic_storage_sets = 64;
  std::uint64_t cyclic_candidate_limit = std::uint64_t{1} << 16;
  std::uint64_t codeword_budget = kDefaultCodewordBudget;
};

/// The outcome of a strategy ladder together with one line per failed stage.
struct LadderResult {
  RetrievalPlan plan;
  std::vector<std::string> log;
};

/// Which sum of binomials C(m, i) over 2^m the rate of an RM plan equals.
enum class RmClosedForm { upper_m_minus_r_minus_rp_minus_1, upper_m_minus_r_minus_rp, neither };

struct RmLadderResult {
  RetrievalPlan plan;
  std::vector<std::string> log;
  RmClosedForm closed_form;
};

/// C = RM(r, m), D = RM(rp, m) with rp < m - r, through the stages of
/// `options`. Orbit stages use the translation or full affine group of
/// GF(2)^m. Throws BudgetExceeded, quoting the log, when every stage fails.
RmLadderResult plan_rm(unsigned r, unsigned rp, unsigned m, const LadderOptions& options = {});

/// Ladder for arbitrary codes; the orbit stages are skipped (no group is
/// known). The default stages are cyclic then basic.
LadderResult plan_auto(const LinearCode& c, const LinearCode& d,
                       const LadderOptions& options = {.stages = {LadderStage::cyclic, LadderStage::basic}});

/// Greedy information sets of c, one for each cyclic rotation of the
/// coordinate order, without duplicates, at most `limit` of them.
std::vector<IndexSet> rotated_information_sets(const LinearCode& c, std::size_t limit);

}  // namespace starpir
