#include "starpir/privacy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "starpir/errors.hpp"
#include "starpir/protocol.hpp"

namespace starpir {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw BudgetExceeded("count exceeds 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw BudgetExceeded("count exceeds 64 bits");
  return out;
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
  constexpr auto max = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  if (num > max || den > max) throw BudgetExceeded("fraction exceeds 64-bit rationals");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

void check_subset_budget(std::size_t n, std::size_t t, std::uint64_t budget) {
  const std::uint64_t total = binomial(n, t);
  if (total > budget)
    throw BudgetExceeded("C(" + std::to_string(n) + ", " + std::to_string(t) + ") = " + std::to_string(total) +
                         " subsets exceed the budget of " + std::to_string(budget));
}

// Inclusion-minimal nonzero supports of weight at most t, bucketed by their
// highest coordinate.
std::vector<std::vector<std::uint64_t>> minimal_supports(const LinearCode& dual_code, std::size_t t) {
  std::vector<std::uint64_t> supports;
  for_each_support(dual_code, kDefaultCodewordBudget, [&](std::uint64_t mask) {
    if (mask != 0 && static_cast<std::size_t>(std::popcount(mask)) <= t) supports.push_back(mask);
  });
  std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

  std::vector<std::uint64_t> minimal;
  for (std::uint64_t s : supports)
    if (std::none_of(minimal.begin(), minimal.end(), [s](std::uint64_t m) { return (m & s) == m; }))
      minimal.push_back(s);

  std::vector<std::vector<std::uint64_t>> by_top(dual_code.length());
  for (std::uint64_t m : minimal) by_top[63 - std::countl_zero(m)].push_back(m);
  return by_top;
}

struct PrunedCounter {
  std::size_t n;
  std::size_t t;
  std::uint64_t budget;
  const std::vector<std::vector<std::uint64_t>>& by_top;
  std::uint64_t visited = 0;
  std::uint64_t unprotected = 0;

  // Elements are added in increasing order, so a support becomes contained
  // exactly when its highest coordinate is added.
  void extend(std::size_t start, std::size_t depth, std::uint64_t mask) {
    for (std::size_t next = start; next + (t - depth) <= n; ++next) {
      if (++visited > budget)
        throw BudgetExceeded("subset search exceeded the budget of " + std::to_string(budget));
      const std::uint64_t grown = mask | (std::uint64_t{1} << next);
      const auto& candidates = by_top[next];
      if (std::any_of(candidates.begin(), candidates.end(), [grown](std::uint64_t m) { return (m & grown) == m; })) {
        unprotected = checked_add(unprotected, binomial(n - next - 1, t - depth - 1));
        continue;
      }
      if (depth + 1 < t) extend(next + 1, depth + 1, grown);
    }
  }
};

}  // namespace

bool protects_set(const LinearCode& d, const IndexSet& t) {
  t.check_within(d.length());
  if (t.empty()) return true;
  if (t.size() > d.dimension()) return false;
  return is_independent(d, t);
}

std::size_t collusion_parameter(const LinearCode& d, std::uint64_t budget) {
  if (d.dimension() == d.length()) return d.length();
  return min_distance(dual(d), budget) - 1;
}

std::uint64_t unprotected_count_by_rank(const LinearCode& d, std::size_t t, std::uint64_t budget) {
  const std::size_t n = d.length();
  if (t > n) return 0;
  check_subset_budget(n, t, budget);
  std::uint64_t bad = 0;
  for_each_combination(n, t, [&](const std::vector<std::size_t>& c) {
    if (!protects_set(d, IndexSet(c))) ++bad;
    return true;
  });
  return bad;
}

std::uint64_t unprotected_count(const LinearCode& d, std::size_t t, std::uint64_t budget) {
  const std::size_t n = d.length();
  if (t > n || t == 0 || d.dimension() == n) return 0;
  const LinearCode dual_code = dual(d);
  const auto dual_size = codeword_count(dual_code);
  if (n > 64 || !dual_size || *dual_size > kDefaultCodewordBudget) return unprotected_count_by_rank(d, t, budget);

  const auto by_top = minimal_supports(dual_code, t);
  PrunedCounter counter{n, t, budget, by_top};
  counter.extend(0, 0, 0);
  return counter.unprotected;
}

std::uint64_t min_weight_count_rm(int rho, int m) {
  if (m < 0 || rho < 0 || rho > m || m > 62)
    throw ValidationError("RM(" + std::to_string(rho) + ", " + std::to_string(m) + ") is out of range");
  // The product equals 2^rho times the Gaussian binomial [m, m-rho]_2, built
  // with [a, b] = [a-1, b-1] + 2^b [a-1, b].
  const auto k = static_cast<std::size_t>(m - rho);
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (int a = 1; a <= m; ++a)
    for (std::size_t b = std::min<std::size_t>(a, k); b >= 1; --b)
      row[b] = checked_add(row[b - 1], checked_mul(std::uint64_t{1} << b, row[b]));
  return checked_mul(std::uint64_t{1} << rho, row[k]);
}

CollusionBound collusion_bound(int r, int m, std::size_t t) {
  if (r < 0 || r >= m || m > 62)
    throw ValidationError("collusion bound needs 0 <= r < m, got r = " + std::to_string(r) +
                          ", m = " + std::to_string(m));
  const std::uint64_t n = std::uint64_t{1} << m;
  const std::uint64_t floor = std::uint64_t{1} << (r + 1);
  if (t < floor || t > n)
    throw ValidationError("collusion bound needs " + std::to_string(floor) + " <= t <= " + std::to_string(n) +
                          ", got t = " + std::to_string(t));
  CollusionBound out;
  out.count = checked_mul(binomial(n - floor, t - floor), min_weight_count_rm(m - r - 1, m));
  out.total = binomial(n, t);
  out.probability = ratio(out.count, out.total);
  out.tight = t < 3 * (std::uint64_t{1} << r);
  return out;
}

CollusionReport collusion_report(const LinearCode& d, std::size_t t, std::optional<RmSpec> rm, bool exact,
                                 std::uint64_t budget) {
  CollusionReport report;
  report.n = d.length();
  report.dimension = d.dimension();
  report.t = t;
  if (t > d.length())
    throw ValidationError("coalition size " + std::to_string(t) + " exceeds n = " + std::to_string(d.length()));
  report.total = binomial(d.length(), t);
  if (exact) {
    report.unprotected = unprotected_count(d, t, budget);
    report.protected_fraction = ratio(report.total - *report.unprotected, report.total);
  }
  if (rm && rm->r < rm->m) {
    const std::uint64_t floor = std::uint64_t{1} << (rm->r + 1);
    if (t >= floor && t <= d.length())
      report.bound = collusion_bound(static_cast<int>(rm->r), static_cast<int>(rm->m), t);
  }
  return report;
}

namespace {

using View = std::vector<Element>;
using Histogram = std::map<View, std::uint64_t>;

View coalition_view(const QueryBatch& batch, const IndexSet& t) {
  View v;
  for (std::size_t gamma = 0; gamma < batch.iterations(); ++gamma)
    for (auto j : t) {
      const auto q = batch.query(gamma, j);
      v.insert(v.end(), q.begin(), q.end());
    }
  return v;
}

double tv_distance(const Histogram& a, const Histogram& b, std::uint64_t total) {
  std::uint64_t diff = 0;
  for (const auto& [view, count] : a) {
    const auto it = b.find(view);
    const std::uint64_t other = it == b.end() ? 0 : it->second;
    diff += count > other ? count - other : other - count;
  }
  for (const auto& [view, count] : b)
    if (!a.count(view)) diff += count;
  return static_cast<double>(diff) / (2.0 * static_cast<double>(total));
}

DistributionAudit summarise(DistributionMode mode, const std::vector<Histogram>& hist, std::uint64_t runs) {
  DistributionAudit out;
  out.mode = mode;
  out.runs = runs;
  for (std::size_t w = 1; w < hist.size(); ++w) out.tv_distance = std::max(out.tv_distance, tv_distance(hist[0], hist[w], runs));
  if (mode == DistributionMode::exhaustive)
    out.identical = std::all_of(hist.begin(), hist.end(), [&](const Histogram& h) { return h == hist[0]; });
  return out;
}

}  // namespace

DistributionAudit exhaustive_query_distribution(const RetrievalPlan& plan, std::size_t files, const IndexSet& t) {
  t.check_within(plan.n());
  if (files == 0) throw ValidationError("need at least one file");
  const Field& f = plan.storage().field();
  const std::size_t symbols = files * plan.s() * plan.b() * plan.retrieval().dimension();
  std::uint64_t choices = 1;
  for (std::size_t i = 0; i < symbols; ++i) {
    choices *= f.order();
    if (choices > kExhaustiveRandomnessLimit)
      throw BudgetExceeded("exhaustive audit needs more than 2^20 randomness choices");
  }

  std::vector<Element> digits(symbols, 0);
  std::vector<Histogram> hist(files);
  for (std::uint64_t run = 0; run < choices; ++run) {
    for (std::size_t w = 0; w < files; ++w) {
      std::size_t offset = 0;
      const MessageSource source = [&](std::span<Element> message) {
        std::copy_n(digits.begin() + static_cast<std::ptrdiff_t>(offset), message.size(), message.begin());
        offset += message.size();
      };
      ++hist[w][coalition_view(make_queries(plan, files, w, source), t)];
    }
    for (std::size_t i = 0; i < symbols && ++digits[i] == f.order(); ++i) digits[i] = 0;
  }
  return summarise(DistributionMode::exhaustive, hist, choices);
}

DistributionAudit sampled_query_distribution(const RetrievalPlan& plan, std::size_t files, const IndexSet& t,
                                             std::uint64_t samples, std::uint64_t seed) {
  t.check_within(plan.n());
  if (files == 0) throw ValidationError("need at least one file");
  if (samples == 0) throw ValidationError("need at least one sample");
  const SeededRng root(seed);
  std::vector<Histogram> hist(files);
  for (std::size_t w = 0; w < files; ++w) {
    const SeededRng stream = root.split(w);
    for (std::uint64_t i = 0; i < samples; ++i)
      ++hist[w][coalition_view(make_queries(plan, files, w, stream.split(i)), t)];
  }
  return summarise(DistributionMode::sampled, hist, samples);
}

}  // namespace starpir
