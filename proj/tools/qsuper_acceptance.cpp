// Runs every acceptance criterion and prints one line per criterion.
// Exit status is 1 when any criterion fails.

#include <cstdlib>
#include <iostream>

#include "qsuper/acceptance.hpp"

int main(int argc, char** argv) {
  qsuper::AcceptanceOptions opt;
  bool timings = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--timings") timings = true;
    else if (a == "--type" && i + 1 < argc) opt.only_type = argv[++i];
    else if (a == "--cache-dir" && i + 1 < argc) opt.cache_dir = argv[++i];
    else {
      std::cerr << "usage: qsuper_acceptance [--type T] [--cache-dir DIR] [--timings]\n";
      return 2;
    }
  }
  if (opt.cache_dir.empty())
    if (const char* env = std::getenv("QSUPER_CACHE_DIR")) opt.cache_dir = env;
  bool ok = true;
  opt.on_row = [&](const qsuper::AcceptanceRow& r) {
    std::cout << qsuper::format_row(r, timings) << std::endl;
    if (r.status == "FAIL") ok = false;
  };
  qsuper::run_acceptance(opt);
  return ok ? 0 : 1;
}
