#include "starpir/builders.hpp"

#include <numeric>
#include <set>

#include "starpir/families.hpp"

namespace starpir {

namespace {

LinearCode star_dual_checked(const LinearCode& c, const LinearCode& d) {
  if (!(c.field() == d.field()) || c.length() != d.length())
    throw PlanError(PlanFault::shape, "C and D must share field and length");
  const LinearCode star = star_product(c, d);
  if (star.dimension() == star.length())
    throw PlanError(PlanFault::full_star_product, "C * D is the whole space; no coordinates can be projected out");
  return dual(star);
}

void require_information_set(const LinearCode& c, const IndexSet& s, const std::string& what) {
  s.check_within(c.length());
  if (s.size() != c.dimension() || !is_information_set(c, s))
    throw PlanError(PlanFault::storage_set, what + " {" + s.to_string() + "} is not an information set");
}

void check_cap(std::size_t b, std::size_t s, std::size_t cap) {
  if (b > cap || s > cap) throw CapExceeded(b, s, cap);
}

IndexSet shifted(const IndexSet& s, const std::vector<std::size_t>& positions, std::size_t shift) {
  std::vector<std::size_t> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(s[(p + shift) % s.size()]);
  return IndexSet(std::move(out));
}

}  // namespace

RetrievalPlan plan_basic(const LinearCode& c, const LinearCode& d, std::uint64_t budget, std::size_t cap) {
  star_dual_checked(c, d);
  const std::size_t dist = min_distance(star_product(c, d), budget);
  if (dist < 2) throw ValidationError("C * D has minimum distance 1; the basic plan would download nothing");
  const std::size_t cd = dist - 1;
  const std::size_t k = c.dimension();
  const std::size_t g = cd / k, rem = cd % k;

  std::size_t s = 1, tail_rows = 0, a = 0;
  if (rem > 0) {
    const std::size_t l = std::lcm(rem, k);
    s = l / rem;
    tail_rows = l / k;
    a = std::gcd(rem, k);
  }
  const std::size_t b = g * s + tail_rows;
  check_cap(b, s, cap);
  const auto sets = disjoint_information_sets(c, g + (rem > 0 ? 1 : 0));

  std::vector<IndexSet> s_sets;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t gamma = 0; gamma < s; ++gamma) s_sets.push_back(sets[i]);
  for (std::size_t t = 0; t < tail_rows; ++t) s_sets.push_back(sets[g]);

  const std::size_t n = c.length();
  std::vector<IndexSet> j_sets;
  std::vector<std::vector<std::int32_t>> selector(s, std::vector<std::int32_t>(n, -1));
  for (std::size_t gamma = 0; gamma < s; ++gamma) {
    std::vector<std::size_t> j;
    for (std::size_t i = 0; i < g; ++i)
      for (auto col : sets[i]) {
        j.push_back(col);
        selector[gamma][col] = static_cast<std::int32_t>(i * s + gamma);
      }
    for (std::size_t t = 0; t < tail_rows; ++t)
      for (std::size_t u = 0; u < a; ++u) {
        const std::size_t col = sets[g][(a * (gamma + t) + u) % k];
        j.push_back(col);
        selector[gamma][col] = static_cast<std::int32_t>(g * s + t);
      }
    j_sets.emplace_back(std::move(j));
  }
  return RetrievalPlan::assemble(c, d, std::move(s_sets), std::move(j_sets), std::move(selector), "basic");
}

RetrievalPlan plan_symmetric(const LinearCode& c, const LinearCode& d, const IndexSet& s, std::size_t cap) {
  const LinearCode star_dual = star_dual_checked(c, d);
  require_information_set(c, s, "S");
  const std::size_t k = c.dimension(), cd = star_dual.dimension();
  if (cd > k)
    throw PlanError(PlanFault::retrieval_set, "dim (C * D)^perp = " + std::to_string(cd) +
                                                  " exceeds k; S has no subsets of that size");
  const std::uint64_t iterations = binomial(k, cd);
  const std::uint64_t rows = binomial(k - 1, cd - 1);
  check_cap(rows, iterations, cap);

  std::vector<IndexSet> j_sets;
  for_each_combination(k, cd, [&](const std::vector<std::size_t>& pos) {
    std::vector<std::size_t> j;
    for (auto p : pos) j.push_back(s[p]);
    IndexSet set(std::move(j));
    if (!is_information_set(star_dual, set))
      throw PlanError(PlanFault::retrieval_set,
                      "{" + set.to_string() + "} is not an information set of (C * D)^perp");
    j_sets.push_back(std::move(set));
    return true;
  });
  return plan_from_sets(c, d, std::vector<IndexSet>(rows, s), std::move(j_sets), "symmetric");
}

RetrievalPlan plan_cyclic(const LinearCode& c, const LinearCode& d, const IndexSet& s, const IndexSet& j) {
  const LinearCode star_dual = star_dual_checked(c, d);
  require_information_set(c, s, "S");
  if (j.empty() || !j.is_subset_of(s))
    throw PlanError(PlanFault::retrieval_set, "J {" + j.to_string() + "} must be a nonempty subset of S");

  std::vector<std::size_t> positions;
  for (std::size_t p = 0; p < s.size(); ++p)
    if (j.contains(s[p])) positions.push_back(p);
  std::vector<IndexSet> j_sets;
  for (std::size_t t = 0; t < s.size(); ++t) {
    IndexSet shift = shifted(s, positions, t);
    if (!is_independent(star_dual, shift))
      throw PlanError(PlanFault::retrieval_set, "shift " + std::to_string(t) + " of J, {" + shift.to_string() +
                                                    "}, is not contained in an information set of (C * D)^perp");
    j_sets.push_back(std::move(shift));
  }
  return plan_from_sets(c, d, std::vector<IndexSet>(j.size(), s), std::move(j_sets), "cyclic");
}

std::optional<IndexSet> find_cyclic(const LinearCode& c, const LinearCode& d, const IndexSet& s,
                                    std::uint64_t candidate_limit) {
  const LinearCode star_dual = star_dual_checked(c, d);
  const std::size_t cd = star_dual.dimension();
  if (cd > s.size()) return std::nullopt;

  // Shifted sets recur across candidates; remember each verdict.
  std::set<IndexSet> good, bad;
  const auto independent = [&](const IndexSet& t) {
    if (good.count(t)) return true;
    if (bad.count(t)) return false;
    const bool ok = is_independent(star_dual, t);
    (ok ? good : bad).insert(t);
    return ok;
  };

  std::optional<IndexSet> found;
  std::uint64_t tried = 0;
  for_each_combination(s.size(), cd, [&](const std::vector<std::size_t>& positions) {
    if (++tried > candidate_limit) return false;
    for (std::size_t t = 0; t < s.size(); ++t)
      if (!independent(shifted(s, positions, t))) return true;
    found = shifted(s, positions, 0);
    return false;
  });
  return found;
}

RetrievalPlan plan_orbit(const LinearCode& c, const LinearCode& d, const IndexSet& s, const IndexSet& j,
                         const PermutationGroupSpec& g, const PermutationGroupSpec& h, std::size_t cap) {
  const LinearCode star_dual = star_dual_checked(c, d);
  const std::size_t n = c.length();
  if (g.degree() != n || h.degree() != n) throw ValidationError("group degree differs from code length");
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    if (!is_automorphism(c, g.generators[i]))
      throw ValidationError("generator " + std::to_string(i + 1) + " of G is not an automorphism of C");
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    if (!is_automorphism(star_dual, h.generators[i]))
      throw ValidationError("generator " + std::to_string(i + 1) + " of H is not an automorphism of (C * D)^perp");
  if (!is_transitive(g)) throw ValidationError("G is not transitive on the coordinates");
  if (!is_transitive(h)) throw ValidationError("H is not transitive on the coordinates");
  require_information_set(c, s, "S");
  j.check_within(n);
  if (j.empty() || !is_independent(star_dual, j))
    throw PlanError(PlanFault::retrieval_set,
                    "J {" + j.to_string() + "} is not contained in an information set of (C * D)^perp");

  const auto s_orbit = set_orbit(g, s);
  const auto j_orbit = set_orbit(h, j);
  // A transitive group spreads an orbit evenly: every coordinate lies in
  // |orbit| |set| / n of its members.
  const std::size_t x = s_orbit.size() * s.size() / n;
  const std::size_t y = j_orbit.size() * j.size() / n;
  const std::size_t l = std::lcm(x, y);
  const std::size_t b = l / x * s_orbit.size();
  const std::size_t iterations = l / y * j_orbit.size();
  check_cap(b, iterations, cap);

  std::vector<IndexSet> s_sets, j_sets;
  for (std::size_t i = 0; i < l / x; ++i) s_sets.insert(s_sets.end(), s_orbit.begin(), s_orbit.end());
  for (std::size_t i = 0; i < l / y; ++i) j_sets.insert(j_sets.end(), j_orbit.begin(), j_orbit.end());
  return plan_from_sets(c, d, std::move(s_sets), std::move(j_sets), "orbit");
}

std::string to_string(LadderStage stage) {
  switch (stage) {
    case LadderStage::cyclic: return "cyclic";
    case LadderStage::translation_orbit: return "translation-orbit";
    case LadderStage::affine_orbit: return "affine-orbit";
    case LadderStage::basic: return "basic";
  }
  return "unknown";
}

std::vector<IndexSet> rotated_information_sets(const LinearCode& c, std::size_t limit) {
  const std::size_t n = c.length();
  std::vector<IndexSet> out;
  std::set<IndexSet> seen;
  std::vector<std::size_t> order(n);
  for (std::size_t start = 0; start < n && out.size() < limit; ++start) {
    for (std::size_t i = 0; i < n; ++i) order[i] = (start + i) % n;
    auto s = extend_to_information_set(c, IndexSet{}, order);
    if (s && seen.insert(*s).second) out.push_back(*s);
  }
  return out;
}

namespace {

std::optional<RetrievalPlan> try_cyclic(const LinearCode& c, const LinearCode& d, const LadderOptions& options,
                                        std::vector<std::string>& log) {
  const std::size_t cd = star_dual_checked(c, d).dimension();
  if (cd > c.dimension()) {
    log.push_back("cyclic: skipped, dim (C * D)^perp = " + std::to_string(cd) + " exceeds k = " +
                  std::to_string(c.dimension()));
    return std::nullopt;
  }
  const auto candidates = rotated_information_sets(c, options.cyclic_storage_sets);
  for (const auto& s : candidates)
    if (auto j = find_cyclic(c, d, s, options.cyclic_candidate_limit)) return plan_cyclic(c, d, s, *j);
  log.push_back("cyclic: no J found in " + std::to_string(candidates.size()) + " information sets of C");
  return std::nullopt;
}

std::optional<RetrievalPlan> try_orbit(const LinearCode& c, const LinearCode& d, const PermutationGroupSpec& g,
                                       const std::string& name, const LadderOptions& options,
                                       std::vector<std::string>& log) {
  const LinearCode star_dual = star_dual_checked(c, d);
  try {
    return plan_orbit(c, d, information_set(c), information_set(star_dual), g, g, options.cap);
  } catch (const CapExceeded& e) {
    log.push_back(name + ": b = " + std::to_string(e.rows()) + ", s = " + std::to_string(e.iterations()) +
                  " exceed the cap " + std::to_string(options.cap));
    return std::nullopt;
  }
}

[[noreturn]] void ladder_exhausted(const std::vector<std::string>& log) {
  std::string what = "every planning strategy failed:";
  for (const auto& line : log) what += "\n  " + line;
  throw BudgetExceeded(what);
}

}  // namespace

RmLadderResult plan_rm(unsigned r, unsigned rp, unsigned m, const LadderOptions& options) {
  if (rp + r >= m) throw ValidationError("plan_rm needs r' < m - r");
  const LinearCode c = reed_muller(r, m);
  const LinearCode d = reed_muller(rp, m);
  std::vector<std::string> log;
  std::optional<RetrievalPlan> plan;
  for (LadderStage stage : options.stages) {
    switch (stage) {
      case LadderStage::cyclic:
        plan = try_cyclic(c, d, options, log);
        break;
      case LadderStage::translation_orbit:
        plan = try_orbit(c, d, PermutationGroupSpec{translation_generators(m)}, to_string(stage), options, log);
        break;
      case LadderStage::affine_orbit:
        plan = try_orbit(c, d, PermutationGroupSpec{affine_generators(m)}, to_string(stage), options, log);
        break;
      case LadderStage::basic:
        try {
          plan = plan_basic(c, d, options.codeword_budget, options.cap);
        } catch (const CapExceeded& e) {
          log.push_back(std::string("basic: ") + e.what());
        }
        break;
    }
    if (plan) break;
  }
  if (!plan) ladder_exhausted(log);

  const Rational rate = pir_rate(*plan);
  const auto closed_form = [&](unsigned upper) {
    return Rational(static_cast<std::int64_t>(rm_dimension(upper, m)), std::int64_t{1} << m);
  };
  const unsigned top = m - r - rp;
  RmClosedForm form = RmClosedForm::neither;
  if (rate == closed_form(top - 1))
    form = RmClosedForm::upper_m_minus_r_minus_rp_minus_1;
  else if (rate == closed_form(top))
    form = RmClosedForm::upper_m_minus_r_minus_rp;
  return {std::move(*plan), std::move(log), form};
}

LadderResult plan_auto(const LinearCode& c, const LinearCode& d, const LadderOptions& options) {
  std::vector<std::string> log;
  for (LadderStage stage : options.stages) {
    std::optional<RetrievalPlan> plan;
    switch (stage) {
      case LadderStage::cyclic:
        plan = try_cyclic(c, d, options, log);
        break;
      case LadderStage::basic:
        try {
          plan = plan_basic(c, d, options.codeword_budget, options.cap);
        } catch (const CapExceeded& e) {
          log.push_back(std::string("basic: ") + e.what());
        }
        break;
      default:
        log.emplace_back(to_string(stage));
        log.back() += ": skipped, no automorphism group is known for these codes";
    }
    if (plan) return {std::move(*plan), std::move(log)};
  }
  ladder_exhausted(log);
}

}  // namespace starpir
