#include "starpir/rates.hpp"

#include <ostream>
#include <string>

#include "starpir/errors.hpp"
#include "starpir/families.hpp"

namespace starpir {

namespace {

Rational frac(std::size_t p, std::size_t q) {
  return Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
}

std::string rm_label(unsigned r, unsigned m) {
  std::string s = "RM(";
  s += std::to_string(r);
  s += ',';
  s += std::to_string(m);
  s += ')';
  return s;
}

std::string grs_label(std::size_t n, std::size_t k) {
  std::string s = "GRS[";
  s += std::to_string(n);
  s += ',';
  s += std::to_string(k);
  s += ']';
  return s;
}

RateTableRow rm_row(unsigned r, unsigned rp, unsigned m) {
  const std::size_t n = std::size_t{1} << m;
  return {n, rm_label(r, m), frac(rm_dimension(r, m), n), (std::size_t{2} << rp) - 1, rm_pir_rate(r, rp, m), "RM"};
}

RateTableRow grs_row(std::size_t n, std::size_t k, std::size_t t) {
  return {n, grs_label(n, k), frac(k, n), t, grs_pir_rate(n, k, t), "GRS"};
}

}  // namespace

Rational rm_pir_rate(unsigned r, unsigned rp, unsigned m) {
  if (r + rp >= m)
    throw ValidationError("RM rate needs r + r' < m, got r = " + std::to_string(r) + ", r' = " + std::to_string(rp) +
                          ", m = " + std::to_string(m));
  return frac(rm_dimension(m - r - rp - 1, m), std::size_t{1} << m);
}

Rational grs_pir_rate(std::size_t n, std::size_t k, std::size_t t) {
  if (k == 0 || t == 0 || k + t > n)
    throw ValidationError("GRS rate needs k, t >= 1 and k + t <= n");
  return frac(n - (k + t - 1), n);
}

std::vector<RateTableRow> fig_left_rates() {
  std::vector<RateTableRow> rm, grs;
  for (unsigned rp = 0; rp <= 2; ++rp)
    for (unsigned m = 3; m <= 9; m += 2) {
      const unsigned r = (m - 1) / 2;
      if (r + rp >= m) continue;
      rm.push_back(rm_row(r, rp, m));
      const std::size_t n = std::size_t{1} << m;
      grs.push_back(grs_row(n, n / 2, rm.back().t));
    }
  rm.insert(rm.end(), grs.begin(), grs.end());
  return rm;
}

std::vector<RateTableRow> fig_right_rates() {
  constexpr unsigned m = 6;
  constexpr std::size_t n = 64;
  std::vector<RateTableRow> rows;
  for (unsigned rp = 0; rp <= 4; ++rp)
    for (unsigned r = 0; r + rp < m; ++r) rows.push_back(rm_row(r, rp, m));
  for (unsigned rp = 0; rp <= 4; ++rp) {
    const std::size_t t = (std::size_t{2} << rp) - 1;
    if (t == 1) {
      for (unsigned r = 0; r < m; ++r) rows.push_back(grs_row(n, rm_dimension(r, m), t));
    } else {
      rows.push_back(grs_row(n, 1, t));
      rows.push_back(grs_row(n, n - t, t));
    }
  }
  return rows;
}

std::vector<RateTableRow> custom_rates(unsigned r, unsigned m, std::size_t t) {
  RmSpec{r, m}.validate();
  unsigned rp = 0;
  while (rp < 63 && (std::size_t{2} << rp) - 1 < t) ++rp;
  if ((std::size_t{2} << rp) - 1 != t)
    throw ValidationError("t must be 2^{r'+1} - 1 for an RM retrieval code, got " + std::to_string(t));
  const RateTableRow rm = rm_row(r, rp, m);
  const std::size_t k = rm_dimension(r, m);
  if (k + t > rm.n) return {rm};
  return {rm, grs_row(rm.n, k, t)};
}

void write_rates_csv(std::ostream& out, const std::vector<RateTableRow>& rows) {
  out << "n,code,code_rate,t,pir_rate_frac,pir_rate_dec,family\n";
  for (const RateTableRow& row : rows)
    out << row.n << ",\"" << row.code << "\"," << to_fraction(row.code_rate) << ',' << row.t << ','
        << to_fraction(row.pir_rate) << ',' << to_decimal(row.pir_rate) << ",\"" << row.family << "\"\n";
}

}  // namespace starpir
