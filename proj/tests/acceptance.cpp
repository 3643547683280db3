// Prints one line per acceptance criterion. Exits 0 when exactly the
// criteria named with --known-failure fail.
#include <cstring>
#include <iostream>
#include <set>
#include <string>

#include "subgrowth/acceptance.hpp"

int main(int argc, char** argv) {
  subgrowth::AcceptanceOptions opt;
  std::set<std::string> known;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      opt.slow = true;
    } else if (std::strcmp(argv[i], "--known-failure") == 0 && i + 1 < argc) {
      known.insert(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--slow] [--known-failure ID]...\n";
      return 2;
    }
  }
  auto results = subgrowth::run_acceptance(opt);
  subgrowth::print_acceptance(results, std::cout);
  int status = 0;
  for (const auto& r : results) {
    if (r.pass && known.contains(r.id)) {
      std::cout << r.id << " was listed as a known failure but passes\n";
      status = 1;
    } else if (!r.pass && !known.contains(r.id)) {
      status = 1;
    }
  }
  return status;
}
