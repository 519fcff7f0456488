#pragma once

#include <iosfwd>
#include <string>

#include "starpir/plan.hpp"

namespace starpir {

// Plan manifest, all indices 1-based:
//
//   n k b s
//   <b lines: the members of S_1 .. S_b>
//   <s lines: the members of J_1 .. J_s>
//   <s matrices E^(1) .. E^(s), each n x b in the matrix text format>
//
// The codes are not part of the manifest; the reader is given C and D and
// re-validates everything through RetrievalPlan::assemble.

void write_manifest(std::ostream& out, const RetrievalPlan& plan);
std::string to_manifest(const RetrievalPlan& plan);

RetrievalPlan read_manifest(std::istream& in, const LinearCode& c, const LinearCode& d);
RetrievalPlan read_manifest_file(const std::string& path, const LinearCode& c, const LinearCode& d);

}  // namespace starpir
