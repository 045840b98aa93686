#ifndef DISCRIM_VERIFY_H_
#define DISCRIM_VERIFY_H_

#include <ostream>
#include <string>
#include <vector>

#include "discrim/numtheory.h"

namespace discrim {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  // Upper end of the brute-versus-closed comparison.
  u64 nmax = 4096;
  unsigned workers = 1;
};

// Suite names accepted by run_suite, in criterion order, followed by "all".
const std::vector<std::string>& suite_names();

// Runs one named suite (or "all") and returns one result per criterion.
// Throws std::invalid_argument for an unknown name.
std::vector<CriterionResult> run_suite(const std::string& name, const VerifyOptions& options = {});

// "PASS  3 period formula: ..." per line.
void print_results(std::ostream& out, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace discrim

#endif  // DISCRIM_VERIFY_H_
