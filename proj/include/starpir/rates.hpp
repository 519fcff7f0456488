#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "starpir/rational.hpp"

namespace starpir {

struct RateTableRow {
  std::size_t n = 0;
  std::string code;  // "RM(r,m)" or "GRS[n,k]"
  Rational code_rate;
  std::size_t t = 0;
  Rational pir_rate;
  std::string family;  // "RM" or "GRS"
};

/// dim(RM(r,m) * RM(r',m))^perp / 2^m = dim RM(m-r-r'-1, m) / 2^m; the
/// scheme protects against 2^{r'+1} - 1 colluders. Requires r + r' < m.
Rational rm_pir_rate(unsigned r, unsigned rp, unsigned m);

/// (n - (k + t - 1)) / n for a GRS storage code and a GRS retrieval code of
/// dimension t. Requires k + t <= n.
Rational grs_pir_rate(std::size_t n, std::size_t k, std::size_t t);

/// Code rate 1/2: m odd with r = (m-1)/2, n in {8, 32, 128, 512},
/// t in {1, 3, 7}, for RM and GRS.
std::vector<RateTableRow> fig_left_rates();

/// n = 64: every RM(r,6) storage code against t in {1, 3, 7, 15, 31}, then
/// the GRS points drawn alongside (all RM dimensions for t = 1, the two
/// extreme dimensions otherwise).
std::vector<RateTableRow> fig_right_rates();

/// RM(r,m) storage with t = 2^{r'+1} - 1, plus the GRS row of the same
/// length and dimension. Throws ValidationError when t has the wrong form
/// or the rate would be zero.
std::vector<RateTableRow> custom_rates(unsigned r, unsigned m, std::size_t t);

/// Header `n,code,code_rate,t,pir_rate_frac,pir_rate_dec,family`; labels are
/// quoted and decimals carry 10 places.
void write_rates_csv(std::ostream& out, const std::vector<RateTableRow>& rows);

}  // namespace starpir
