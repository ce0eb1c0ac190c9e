#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace kellymod {

// rank: Wilson formula value, elimination value, rational rank, agreement.
Report cmd_rank(unsigned v, unsigned t, unsigned k, uint32_t p /* 0 = rational only */);

// kernel: left-kernel basis of W[t,k] mod p against the digit prediction.
// The basis itself is attached for rendering (human output only).
struct KernelResult {
  Report report;
  std::vector<std::string> basis_rows;
};
KernelResult cmd_kernel(unsigned v, unsigned t, unsigned k, uint32_t p);

// verify: dispatch to a catalogued theorem check.
Report cmd_verify(const std::string& id, const Json& params, const VerifyOptions& opts);
std::vector<std::string> verify_catalogue();

struct SuiteResult {
  Report aggregate;
  std::vector<Report> sub;
};

// The acceptance grid. quick caps v at 8 and skips diagonal forms beyond
// 40x40 plus the 12-vertex constructed checks.
SuiteResult cmd_suite(const std::string& profile, const VerifyOptions& opts);

}  // namespace kellymod
