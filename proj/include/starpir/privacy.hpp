#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "starpir/families.hpp"
#include "starpir/linear_code.hpp"
#include "starpir/plan.hpp"
#include "starpir/rational.hpp"

namespace starpir {

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

/// True iff the retrieval code D has full rank on T, so the joint queries
/// of the servers in T are uniform whatever file is wanted.
bool protects_set(const LinearCode& d, const IndexSet& t);

/// d(D^perp) - 1: every coalition of at most this size is protected.
/// Returns n when D is the whole space.
std::size_t collusion_parameter(const LinearCode& d, std::uint64_t budget = kDefaultCodewordBudget);

/// Exact number of t-subsets T of [n] with rank(D restricted to T) < t.
///
/// For n <= 64 with a dual small enough to enumerate, the minimal supports
/// of D^perp are collected first; a t-set is unprotected iff it contains
/// one, and the search counts every completion of such a prefix at once.
/// Otherwise each t-set is rank-tested. Both routes throw BudgetExceeded
/// past `budget` visited subsets.
std::uint64_t unprotected_count(const LinearCode& d, std::size_t t, std::uint64_t budget = kDefaultSubsetBudget);

/// The plain rank test applied to every t-set.
std::uint64_t unprotected_count_by_rank(const LinearCode& d, std::size_t t,
                                        std::uint64_t budget = kDefaultSubsetBudget);

/// Number of minimum-weight codewords of RM(rho, m), namely
/// 2^rho * prod_{i<m-rho} (2^{m-i} - 1) / (2^{m-rho-i} - 1).
std::uint64_t min_weight_count_rm(int rho, int m);

struct CollusionBound {
  std::uint64_t count = 0;  // C(2^m - 2^{r+1}, t - 2^{r+1}) * minimum-weight count of RM(m-r-1, m)
  std::uint64_t total = 0;  // C(2^m, t)
  Rational probability;     // count / total
  bool tight = false;       // t < 3 * 2^r
};

/// Union bound on the unprotected t-sets when D = RM(r, m).
/// Requires 0 <= r < m and 2^{r+1} <= t <= 2^m.
CollusionBound collusion_bound(int r, int m, std::size_t t);

struct CollusionReport {
  std::size_t n = 0;
  std::size_t dimension = 0;
  std::size_t t = 0;
  std::uint64_t total = 0;
  std::optional<std::uint64_t> unprotected;  // exact count, when requested
  std::optional<Rational> protected_fraction;
  std::optional<CollusionBound> bound;  // only for Reed-Muller retrieval codes in range
};

/// Exact count when `exact`; the closed-form bound whenever `rm` is given
/// and t lies in its range.
CollusionReport collusion_report(const LinearCode& d, std::size_t t, std::optional<RmSpec> rm, bool exact,
                                 std::uint64_t budget = kDefaultSubsetBudget);

enum class DistributionMode { exhaustive, sampled };

struct DistributionAudit {
  DistributionMode mode = DistributionMode::exhaustive;
  std::uint64_t runs = 0;  // randomness choices (exhaustive) or samples, per wanted file
  /// Largest total-variation distance between the coalition's view for
  /// file 1 and for any other file. Exact in exhaustive mode.
  double tv_distance = 0;
  /// Exhaustive mode only: whether all M distributions coincide.
  std::optional<bool> identical;
};

inline constexpr std::uint64_t kExhaustiveRandomnessLimit = std::uint64_t{1} << 20;

/// Enumerates every choice of the M s b random codewords of D (at most
/// 2^20 choices) and compares the exact distributions of T's query tuples.
DistributionAudit exhaustive_query_distribution(const RetrievalPlan& plan, std::size_t files, const IndexSet& t);

/// Draws `samples` seeded query batches per wanted file and reports the
/// empirical total-variation distance.
DistributionAudit sampled_query_distribution(const RetrievalPlan& plan, std::size_t files, const IndexSet& t,
                                             std::uint64_t samples, std::uint64_t seed);

}  // namespace starpir
