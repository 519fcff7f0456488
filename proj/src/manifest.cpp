#include "starpir/manifest.hpp"

#include <fstream>
#include <sstream>

namespace starpir {

void write_manifest(std::ostream& out, const RetrievalPlan& plan) {
  out << plan.n() << ' ' << plan.k() << ' ' << plan.b() << ' ' << plan.s() << '\n';
  for (const auto& s : plan.storage_sets()) out << s.to_string() << '\n';
  for (const auto& j : plan.retrieval_sets()) out << j.to_string() << '\n';
  for (std::size_t gamma = 0; gamma < plan.s(); ++gamma) write_matrix(out, plan.e_matrix(gamma));
}

std::string to_manifest(const RetrievalPlan& plan) {
  std::ostringstream out;
  write_manifest(out, plan);
  return out.str();
}

namespace {

std::string next_nonblank_line(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  throw ValidationError(std::string("manifest ended before ") + what);
}

}  // namespace

RetrievalPlan read_manifest(std::istream& in, const LinearCode& c, const LinearCode& d) {
  std::istringstream header(next_nonblank_line(in, "the header"));
  std::size_t n = 0, k = 0, b = 0, s = 0;
  if (!(header >> n >> k >> b >> s)) throw ValidationError("manifest header must be 'n k b s'");
  if (n != c.length() || k != c.dimension())
    throw ValidationError("manifest is for an [" + std::to_string(n) + ", " + std::to_string(k) +
                          "] storage code, not [" + std::to_string(c.length()) + ", " +
                          std::to_string(c.dimension()) + "]");

  std::vector<IndexSet> s_sets, j_sets;
  for (std::size_t i = 0; i < b; ++i) s_sets.push_back(IndexSet::parse(next_nonblank_line(in, "all S sets")));
  for (std::size_t i = 0; i < s; ++i) j_sets.push_back(IndexSet::parse(next_nonblank_line(in, "all J sets")));

  std::vector<std::vector<std::int32_t>> selector;
  for (std::size_t gamma = 0; gamma < s; ++gamma) {
    const Matrix e = read_matrix(in, c.field());
    if (e.rows() != n || e.cols() != b)
      throw PlanError(PlanFault::shape, "E matrix " + std::to_string(gamma + 1) + " must be n x b");
    std::vector<std::int32_t> row(n, -1);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t beta = 0; beta < b; ++beta) {
        if (e(j, beta) == 0) continue;
        if (e(j, beta) != 1 || row[j] >= 0)
          throw PlanError(PlanFault::selection, "E matrix " + std::to_string(gamma + 1) + " row " +
                                                    std::to_string(j + 1) + " is not zero or a unit vector");
        row[j] = static_cast<std::int32_t>(beta);
      }
    selector.push_back(std::move(row));
  }
  return RetrievalPlan::assemble(c, d, std::move(s_sets), std::move(j_sets), std::move(selector), "manifest");
}

RetrievalPlan read_manifest_file(const std::string& path, const LinearCode& c, const LinearCode& d) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open manifest '" + path + "'");
  return read_manifest(in, c, d);
}

}  // namespace starpir
