#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qsuper {

// One acceptance criterion. Every comparison is exact; the only tolerance is
// the wall-clock limit.
struct AcceptanceRow {
  int id = 0;
  std::string title;
  std::string status;  // PASS, FAIL or SKIP
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct AcceptanceOptions {
  // When set, only checks that involve this root datum run; a criterion with
  // none is reported as SKIP.
  std::string only_type;
  std::string cache_dir;
  std::function<void(const AcceptanceRow&)> on_row;
};

std::vector<AcceptanceRow> run_acceptance(const AcceptanceOptions& opt = {});

// "PASS  3  title  (detail)" without timings, so output is reproducible.
std::string format_row(const AcceptanceRow& row, bool with_time = false);

}  // namespace qsuper
