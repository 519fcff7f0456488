// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "starpir/builders.hpp"
#include "starpir/families.hpp"
#include "starpir/privacy.hpp"
#include "starpir/protocol.hpp"
#include "starpir/rates.hpp"

namespace {

using namespace starpir;
using Clock = std::chrono::steady_clock;

const Field kGf2 = Field::prime(2);
// Large enough to enumerate the 2^26 words of RM(3,5).
constexpr std::uint64_t kWideBudget = std::uint64_t{1} << 27;

// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct NamedPlan {
  std::string name;
  RetrievalPlan plan;
};

std::vector<NamedPlan> fixture_plans() {
  std::vector<NamedPlan> plans;
  plans.push_back({"C1/Rep(5)", plan_auto(fixture("C1"), repetition(kGf2, 5)).plan});
  plans.push_back({"C2/Rep(11)", plan_auto(fixture("C2"), repetition(kGf2, 11)).plan});
  const unsigned rm_pairs[][3] = {{0, 1, 4}, {1, 1, 4}, {1, 1, 3}, {2, 1, 5}};
  for (const auto& p : rm_pairs) {
    std::ostringstream name;
    name << "RM(" << p[0] << "," << p[2] << ")/RM(" << p[1] << "," << p[2] << ")";
    plans.push_back({name.str(), plan_rm(p[0], p[1], p[2]).plan});
  }
  return plans;
}

std::string rate_text(const Rational& r) { return to_fraction(r); }

void criterion_1(Check& check) {
  const auto start = Clock::now();
  std::size_t codes = 0;
  for (unsigned m = 0; m <= 5; ++m)
    for (unsigned r = 0; r <= m; ++r) {
      if (rm_dimension(r, m) > 20) continue;
      const LinearCode c = reed_muller(r, m);
      std::size_t dim = 0;
      for (unsigned i = 0; i <= r; ++i) dim += binomial(m, i);
      const std::string label = "RM(" + std::to_string(r) + "," + std::to_string(m) + ")";
      check.expect(c.dimension() == dim, label + " dimension");
      check.expect(min_distance(c) == (std::size_t{1} << (m - r)), label + " distance");
      ++codes;
    }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 10.0, "runtime");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%zu codes in %.2f s", codes, elapsed);
  check.note = buf;
}

void criterion_2(Check& check) {
  std::size_t pairs = 0;
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned r = 0; r <= m; ++r) {
      for (unsigned rp = 0; r + rp <= m; ++rp) {
        check.expect(star_product(reed_muller(r, m), reed_muller(rp, m)) == reed_muller(r + rp, m), "star product");
        ++pairs;
      }
      if (r < m) check.expect(dual(reed_muller(r, m)) == reed_muller(m - r - 1, m), "dual");
    }
  check.note = std::to_string(pairs) + " star pairs, duals for m <= 5";
}

void criterion_3(Check& check) {
  const LinearCode rm04 = reed_muller(0, 4), rm14 = reed_muller(1, 4), rm24 = reed_muller(2, 4);
  check.expect(pir_rate(plan_auto(fixture("C1"), repetition(kGf2, 5)).plan) == Rational(2, 5), "C1");
  check.expect(pir_rate(plan_auto(fixture("C2"), repetition(kGf2, 11)).plan) == Rational(5, 11), "C2");
  check.expect(pir_rate(plan_rm(1, 1, 4).plan) == Rational(5, 16), "RM(1,4)/RM(1,4)");
  check.expect(pir_rate(plan_rm(0, 1, 4).plan) == Rational(11, 16), "RM(0,4)/RM(1,4)");
  check.expect(collusion_parameter(rm14) == 3, "3-collusion");
  check.expect(pir_rate(plan_basic(rm04, rm14)) == Rational(7, 16), "basic RM(0,4)/RM(1,4)");
  check.expect(pir_rate(plan_basic(rm14, rm14)) == Rational(3, 16), "basic RM(1,4)/RM(1,4)");
  const RetrievalPlan cyclic = plan_cyclic(rm24, repetition(kGf2, 16), IndexSet::from_one_based({1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 16}),
                                           IndexSet::from_one_based({1, 2, 3, 5, 10}));
  check.expect(cyclic.b() == 5 && cyclic.s() == 11 && pir_rate(cyclic) == Rational(5, 16), "cyclic RM(2,4)/Rep(16)");
  check.note = "2/5, 5/11, 5/16, 11/16, 7/16, 3/16, cyclic b=5 s=11 5/16";
}

void criterion_4(Check& check) {
  const LinearCode rm14 = reed_muller(1, 4);
  const Matrix& g = rm14.generator();
  check.expect(g == rm14_printed_generator(), "generator matches the printed matrix");
  // (C * D)^perp = RM(1,4), so H is the same printed generator.
  const Matrix& h = g;
  const IndexSet support = IndexSet::from_one_based({1, 2, 3, 5, 9});
  std::vector<Element> e(16, 0);
  for (auto j : support) e[j] = 1;

  // M = G diag(e) H^T, so (e * xG) H^T = x M.
  Matrix diag(kGf2, 16, 16);
  for (std::size_t j = 0; j < 16; ++j) diag(j, j) = e[j];
  const Matrix m = g * diag * transpose(h);
  const Matrix printed = Matrix::from_rows(
      kGf2, {{1, 0, 0, 0, 0}, {0, 0, 1, 1, 1}, {0, 1, 0, 1, 1}, {0, 1, 1, 0, 1}, {0, 1, 1, 1, 0}});
  check.expect(m == printed, "5x5 matrix");
  check.expect(rank(m) == 5, "invertible");

  for (std::uint32_t bits = 0; bits < 32; ++bits) {
    std::vector<Element> x(5);
    for (std::size_t i = 0; i < 5; ++i) x[i] = (bits >> (4 - i)) & 1;
    const auto y = encode(rm14, x);
    const auto lhs = multiply(star(kGf2, e, y), transpose(h));
    check.expect(lhs == multiply(x, m), "relation for every x");
  }
  check.note = "matrix equals the printed one, rank 5, 32 messages";
}

void criterion_5(Check& check, const std::vector<NamedPlan>& plans) {
  const auto start = Clock::now();
  std::size_t runs = 0;
  for (const NamedPlan& np : plans) {
    const RetrievalPlan& plan = np.plan;
    const Decoder decoder(plan);
    for (std::size_t files = 1; files <= 3; ++files)
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SeededRng root(seed);
        SeededRng data = root.split(0);
        const Database db = Database::random(plan.storage().field(), files, plan.b(), plan.k(), data);
        const StorageSystem storage = StorageSystem::store(db, plan.storage());
        for (std::size_t w = 0; w < files; ++w) {
          const ResponseBatch responses = respond(storage, make_queries(plan, files, w, root.split(1 + w)));
          check.expect(decoder.decode(responses) == db.file(w), np.name);
          ++runs;
        }
      }
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 60.0, "runtime");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu retrievals over %zu plans in %.2f s", runs, plans.size(), elapsed);
  check.note = buf;
}

void criterion_6(Check& check, const std::vector<NamedPlan>& plans) {
  std::uint64_t coalitions = 0;
  for (const NamedPlan& np : plans) {
    const LinearCode& d = np.plan.retrieval();
    const std::size_t t_max = collusion_parameter(d, kWideBudget);
    if (d.length() <= 16) {
      for (std::size_t t = 0; t <= t_max; ++t)
        for_each_combination(d.length(), t, [&](const std::vector<std::size_t>& set) {
          check.expect(protects_set(d, IndexSet(set)), np.name);
          ++coalitions;
          return true;
        });
    } else {
      for (std::size_t t = 1; t <= t_max; ++t) {
        check.expect(unprotected_count(d, t) == 0, np.name);
        coalitions += binomial(d.length(), t);
      }
    }
  }

  const LinearCode rep = repetition(kGf2, 4);
  const RetrievalPlan tiny = plan_from_sets(rep, rep, {IndexSet{0}}, {IndexSet{0}});
  const auto single = exhaustive_query_distribution(tiny, 2, IndexSet{0});
  const auto pair = exhaustive_query_distribution(tiny, 2, IndexSet{0, 1});
  check.expect(single.identical.value_or(false), "tiny instance, |T| = 1 private");
  check.expect(!pair.identical.value_or(true), "tiny instance, |T| = 2 not private");
  check.note = std::to_string(coalitions) + " coalitions full rank; Rep(4): {1} private, {1,2} not private";
}

void criterion_7(Check& check) {
  const LinearCode rm14 = reed_muller(1, 4);
  const auto t5 = unprotected_count(rm14, 5);
  const auto t4 = unprotected_count(rm14, 4);
  const auto t6 = unprotected_count(rm14, 6);
  check.expect(t5 == 1680, "t = 5 count");
  check.expect(Rational(static_cast<std::int64_t>(binomial(16, 5) - t5), 4368) == Rational(2688, 4368), "t = 5 fraction");
  check.expect(t4 == weight_count(reed_muller(2, 4), 4), "t = 4 equals weight-4 count");
  const auto b4 = collusion_bound(1, 4, 4), b5 = collusion_bound(1, 4, 5), b6 = collusion_bound(1, 4, 6);
  check.expect(b4.tight && b4.count == t4, "tight at t = 4");
  check.expect(b5.tight && b5.count == t5, "tight at t = 5");
  check.expect(!b6.tight && t6 <= b6.count, "bound only at t = 6");
  // The printed 120 minimum-weight words and 93.4% protection do not match
  // enumeration; both are asserted to differ.
  check.expect(t4 == 140 && t4 != 120, "printed 120 differs from 140");
  const Rational protected4(static_cast<std::int64_t>(binomial(16, 4) - t4), static_cast<std::int64_t>(binomial(16, 4)));
  check.expect(protected4 != Rational(1820 - 120, 1820), "printed 93.4% differs");
  check.note = "t=4: " + std::to_string(t4) + " (printed 120 differs), t=5: " + std::to_string(t5) +
               " (2688/4368 protected), t=6: " + std::to_string(t6) + " <= " + std::to_string(b6.count);
}

using Point = std::pair<Rational, Rational>;

Rational dyadic(double v) {
  // Plot coordinates are exact dyadic rationals with denominators <= 512.
  return Rational(static_cast<std::int64_t>(v * 512.0 + 0.5), 512);
}

bool has_point(const std::vector<RateTableRow>& rows, const std::string& family, std::size_t t, const Point& p,
               bool x_is_n) {
  for (const auto& row : rows)
    if (row.family == family && row.t == t && row.pir_rate == p.second &&
        (x_is_n ? Rational(static_cast<std::int64_t>(row.n)) == p.first : row.code_rate == p.first))
      return true;
  return false;
}

void criterion_8(Check& check) {
  const auto left = fig_left_rates();
  struct Series {
    std::string family;
    std::size_t t;
    std::vector<std::pair<double, double>> points;
  };
  const std::vector<Series> left_series = {
      {"RM", 1, {{8, 0.5}, {32, 0.5}, {128, 0.5}, {512, 0.5}}},
      {"RM", 3, {{8, 0.125}, {32, 0.1875}, {128, 0.2265625}, {512, 0.25390625}}},
      {"RM", 7, {{32, 0.03125}, {128, 0.0625}, {512, 0.08984375}}},
      {"GRS", 1, {{8, 0.5}, {32, 0.5}, {128, 0.5}, {512, 0.5}}},
      {"GRS", 3, {{8, 0.25}, {32, 0.4375}, {128, 0.484375}}},
      {"GRS", 7, {{32, 0.3125}, {128, 0.453125}, {512, 0.48828125}}},
  };
  std::size_t matched = 0, rm_rows = 0, grs_rows = 0;
  for (const auto& s : left_series)
    for (const auto& [x, y] : s.points) {
      const Point p{Rational(static_cast<std::int64_t>(x)), dyadic(y)};
      check.expect(has_point(left, s.family, s.t, p, true), "fig-left point");
      ++matched;
    }
  for (const auto& row : left) (row.family == "RM" ? rm_rows : grs_rows)++;
  check.expect(rm_rows == 11 && grs_rows == 11, "fig-left row count");
  // The plotted GRS point (512, 0.498046875) disagrees with the formula
  // (n - (k + t - 1)) / n = 254/512 used for every other dashed point.
  check.expect(has_point(left, "GRS", 3, {Rational(512), Rational(254, 512)}, true), "GRS 512 formula value");
  check.expect(!has_point(left, "GRS", 3, {Rational(512), Rational(255, 512)}, true), "GRS 512 printed value");

  const auto right = fig_right_rates();
  const std::vector<Series> right_series = {
      {"RM", 1, {{0.015625, 0.984375}, {0.109375, 0.890625}, {0.34375, 0.65625}, {0.65625, 0.34375}, {0.890625, 0.109375}, {0.984375, 0.015625}}},
      {"RM", 3, {{0.015625, 0.890625}, {0.109375, 0.65625}, {0.34375, 0.34375}, {0.65625, 0.109375}, {0.890625, 0.015625}}},
      {"RM", 7, {{0.015625, 0.65625}, {0.109375, 0.34375}, {0.34375, 0.109375}, {0.65625, 0.015625}}},
      {"RM", 15, {{0.015625, 0.34375}, {0.109375, 0.109375}, {0.34375, 0.015625}}},
      {"RM", 31, {{0.015625, 0.109375}, {0.109375, 0.015625}}},
      {"GRS", 1, {{0.015625, 0.984375}, {0.109375, 0.890625}, {0.34375, 0.65625}, {0.65625, 0.34375}, {0.890625, 0.109375}, {0.984375, 0.015625}}},
      {"GRS", 3, {{0.015625, 0.953125}, {0.953125, 0.015625}}},
      {"GRS", 7, {{0.015625, 0.890625}, {0.890625, 0.015625}}},
      {"GRS", 15, {{0.015625, 0.765625}, {0.765625, 0.015625}}},
      {"GRS", 31, {{0.015625, 0.515625}, {0.515625, 0.015625}}},
  };
  std::size_t right_rm = 0;
  for (const auto& s : right_series)
    for (const auto& [x, y] : s.points) {
      check.expect(has_point(right, s.family, s.t, {dyadic(x), dyadic(y)}, false), "fig-right point");
      ++matched;
    }
  for (const auto& row : right) right_rm += row.family == "RM";
  check.expect(right_rm == 20, "fig-right solid count");
  check.note = std::to_string(matched) + " plotted coordinates exact; GRS (512, t=3) is 254/512, plotted 255/512";
}

void criterion_9(Check& check) {
  const LinearCode rm24 = reed_muller(2, 4);
  const LinearCode rep = repetition(kGf2, 16);
  const PermutationGroupSpec affine{affine_generators(4)};
  bool failed = false;
  try {
    plan_orbit(rm24, rep, information_set(rm24), information_set(dual(rm24)), affine, affine, 4096);
  } catch (const CapExceeded& e) {
    failed = true;
    check.expect(e.rows() == 13440 && e.iterations() == 29568, "orbit scale b = 13440, s = 29568");
  }
  check.expect(failed, "orbit plan exceeds the cap");

  LadderOptions options;
  options.stages = {LadderStage::affine_orbit, LadderStage::cyclic};
  const auto result = plan_rm(2, 0, 4, options);
  check.expect(!result.log.empty(), "ladder logs the orbit failure");
  check.expect(result.plan.strategy() == "cyclic" && result.plan.b() == 5 && result.plan.s() == 11,
               "ladder falls through to cyclic b = 5, s = 11");
  check.note = "orbit needs b = 13440, s = 29568 > 4096; ladder gives cyclic b = " + std::to_string(result.plan.b()) +
               ", s = " + std::to_string(result.plan.s());
}

void criterion_10(Check& check, const std::vector<NamedPlan>& fixtures) {
  std::vector<NamedPlan> plans = fixtures;
  const LinearCode rm14 = reed_muller(1, 4);
  plans.push_back({"basic RM(0,4)/RM(1,4)", plan_basic(reed_muller(0, 4), rm14)});
  plans.push_back({"basic RM(1,4)/RM(1,4)", plan_basic(rm14, rm14)});
  plans.push_back({"symmetric C1", plan_symmetric(fixture("C1"), repetition(kGf2, 5), IndexSet{0, 1, 2})});
  plans.push_back({"orbit RM(1,4)", plan_rm(1, 1, 4, {.stages = {LadderStage::affine_orbit}}).plan});
  plans.push_back({"cyclic RM(2,4)", plan_rm(2, 0, 4).plan});
  plans.push_back({"basic RS[10,3]", plan_basic(reed_solomon(Field::prime(11), 10, 3), repetition(Field::prime(11), 10))});

  for (const NamedPlan& np : plans) {
    const RetrievalPlan& plan = np.plan;
    check.expect(verify_plan(plan).empty(), np.name + " conditions and coverage");
    const auto n = static_cast<std::int64_t>(plan.n());
    const auto lower = Rational(static_cast<std::int64_t>(min_distance(plan.star(), kWideBudget)) - 1, n);
    const auto upper = Rational(static_cast<std::int64_t>(plan.star_dual().dimension()), n);
    const Rational rate = pir_rate(plan);
    check.expect(lower <= rate && rate <= upper, np.name + " rate bracket");
  }

  const std::vector<LinearCode> codes = {fixture("C1"), fixture("C2"), reed_muller(0, 4), reed_muller(1, 4),
                                         reed_muller(2, 4), reed_muller(1, 3), reed_muller(1, 5), reed_muller(2, 5),
                                         repetition(kGf2, 5), repetition(kGf2, 11), repetition(kGf2, 16)};
  for (const LinearCode& c : codes) {
    const std::size_t d = min_distance(c), k = c.dimension();
    const std::size_t want = (d + k - 1) / k;
    try {
      const auto sets = disjoint_information_sets(c, want);
      check.expect(sets.size() >= want, "disjoint information sets");
    } catch (const ValidationError&) {
      check.expect(false, "disjoint information sets");
    }
  }
  check.note = std::to_string(plans.size()) + " plans verified; disjoint information sets on " +
               std::to_string(codes.size()) + " codes";
}

}  // namespace

int main() {
  const std::vector<std::string> titles = {
      "RM parameter suite",         "star product and duality identities", "golden PIR rates",
      "explicit decode matrix",     "round-trip retrieval",                "exact privacy criterion",
      "collusion counting",         "figure reproduction",                 "orbit cap and ladder fall-through",
      "property suite",
  };

  std::vector<NamedPlan> plans;
  std::string plan_error;
  try {
    plans = fixture_plans();
  } catch (const std::exception& e) {
    plan_error = e.what();
  }

  const std::vector<std::function<void(Check&)>> criteria = {
      criterion_1,
      criterion_2,
      criterion_3,
      criterion_4,
      [&](Check& c) { criterion_5(c, plans); },
      [&](Check& c) { criterion_6(c, plans); },
      criterion_7,
      criterion_8,
      criterion_9,
      [&](Check& c) { criterion_10(c, plans); },
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    if (!plan_error.empty()) check.failures.push_back("fixture plans: " + plan_error);
    try {
      criteria[i](check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << titles[i];
    if (ok)
      std::cout << " (" << check.note << ")";
    else
      std::cout << " [" << check.failures.size() << " failed checks, first: " << check.failures.front() << "]";
    std::cout << std::endl;
  }
  std::cout << (failed ? "FAILED: " : "ALL PASSED: ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
            << criteria.size() << " criteria" << std::endl;
  return failed ? 1 : 0;
}
