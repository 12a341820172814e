#pragma once

// CLI invocations whose output is pinned byte for byte under tests/golden.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "creutz/cli.hpp"

namespace testing {

struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {"spectrum_open.json", {"spectrum", "--L", "4", "--m", "0.5", "--phi", "1.2"}},
      {"spectrum_flat.json", {"spectrum", "--L", "6", "--bc", "periodic"}},
      {"zak_topological.json", {"zak", "--m", "0.5", "--phi", "pi"}},
      {"zak_trivial.json", {"zak", "--m", "3", "--phi", "pi/2", "--band", "upper"}},
      {"phase_diagram.csv", {"phase-diagram", "--res", "9"}},
      {"phase_diagram.json", {"phase-diagram", "--res", "5", "--format", "json"}},
      {"evolve_caged.json", {"evolve", "--init", "site:3,A", "--tmax", "2", "--samples", "8", "--probe", "2,A"}},
      {"evolve_caged.csv", {"evolve", "--L", "3", "--init", "site:2,B", "--tmax", "1", "--samples", "2", "--format", "csv"}},
      {"evolve_doublon.json", {"evolve", "--L", "4", "--phi", "pi/2", "--init", "doublon:2,A", "--U", "10", "--tmax", "3", "--samples", "6"}},
      {"evolve_2d.json", {"evolve", "--L", "3", "--space", "2d", "--init", "doublon:2,A", "--U", "5", "--tmax", "1", "--samples", "2"}},
      {"effective_compare.csv", {"effective-compare", "--L", "4", "--phi", "pi/2", "--U", "20", "--init", "doublon:1,A", "--tmax", "5", "--samples", "10", "--format", "csv"}},
      {"map2d_check.json", {"map2d-check", "--L", "3", "--m", "0.4", "--phi", "1", "--U", "3"}},
      {"layout_rungs.csv", {"layout", "--L", "3", "--m", "0.5"}},
  };
  return cases;
}

/// Output of one case; `code` receives the exit status.
inline std::string run_golden(const GoldenCase& c, int& code) {
  std::ostringstream out, err;
  code = creutz::run_cli(c.args, out, err);
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace testing
