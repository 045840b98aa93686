// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <iostream>

#include "discrim/parallel.h"
#include "discrim/verify.h"

int main() {
  discrim::VerifyOptions options;
  options.nmax = 4096;
  options.workers = discrim::default_parallelism();
  const auto results = discrim::run_suite("all", options);
  discrim::print_results(std::cout, results);
  return discrim::all_passed(results) ? 0 : 1;
}
