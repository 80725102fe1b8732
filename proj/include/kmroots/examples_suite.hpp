// Built-in worked examples: each check recomputes a known configuration
// from scratch and compares against its frozen expected outcome. The CLI
// exposes the suite as `verify-paper-examples`; the test suites reuse it.

#pragma once

#include <string>
#include <vector>

namespace kmroots {

struct ExampleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<ExampleCheck> run_example_checks();

}  // namespace kmroots
