#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zslab::checks {

struct Row {
  std::string group;  // filter label, e.g. "C4"
  std::string label;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Result {
  int criterion = 0;
  std::string id;
  std::string title;
  bool ran = false;  // false when every row was filtered out
  bool pass = false;
  std::vector<Row> rows;
  double seconds = 0;
  double limit_seconds = 0;  // 0 = no limit
  std::string error;         // exception text, if the check threw
};

struct Options {
  std::vector<std::string> only;     // check ids; empty = all
  std::optional<std::string> group;  // canonical group name filter
  bool deep = false;
  int jobs = 1;
  std::uint64_t seed = 20240611;
};

struct Info {
  int criterion;
  std::string id;
  std::string title;
};

const std::vector<Info>& catalog();

// Runs the selected checks in criterion order. Exceptions become failed
// results, never crashes. Throws std::invalid_argument on an unknown id.
std::vector<Result> run(const Options& opts);

// "PASS  <n> <id> ..." summary line for one result.
std::string summary_line(const Result& r);

}  // namespace zslab::checks
