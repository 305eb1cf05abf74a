// Runs every acceptance criterion and prints one line per criterion.

#include <cstdio>
#include <string>

#include "liechar/acceptance.hpp"

int main(int argc, char** argv) {
  liechar::AcceptanceOptions opts;
  opts.golden_path = std::string(LIECHAR_GOLDEN_DIR) + "/mixing_times.json";
  for (int i = 1; i < argc; ++i) opts.only.push_back(std::stoi(argv[i]));
  opts.on_result = [](const liechar::CriterionResult& r) {
    std::printf("[%s] %2d %-44s %8.2fs  %s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.flagged ? "(flagged) " : "", r.detail.c_str());
    std::fflush(stdout);
  };
  const auto results = liechar::run_acceptance(opts);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed ? 1 : 0;
}
