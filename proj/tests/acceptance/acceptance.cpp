// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstring>
#include <iostream>

#include "checks.hpp"

int main(int argc, char** argv) {
  zslab::checks::Options opts;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--deep") == 0) opts.deep = true;
  bool ok = true;
  for (const auto& r : zslab::checks::run(opts)) {
    std::cout << zslab::checks::summary_line(r) << "\n";
    for (const auto& row : r.rows)
      std::cout << "        " << (row.pass ? "ok  " : "BAD ") << row.group << "  " << row.label << "  " << row.detail
                << "\n";
    ok = ok && r.pass;
  }
  std::cout << (ok ? "ALL PASS" : "SOME CHECKS FAILED") << "\n";
  return ok ? 0 : 1;
}
