#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dunkl/dihedral.hpp"

namespace dunkl::cli {

enum class Format { csv, json };

struct JobSpec {
  int n = 3;
  cplx k = 0.5;
  PlanePoint x{1.0, 0.0};
  PlanePoint y{1.0, 0.0};
  bool has_instance = false;  // n, k, x, y all given explicitly
  int m_max = 10;
  double tol = 1e-12;
  std::string method;
  std::uint64_t seed = 1;
  int samples = 50;
  int nu = 1;
  int order = 20;
  Format format = Format::csv;
};

cplx parse_complex(const std::string& text);
PlanePoint parse_real_point(const std::string& text);
PlanePoint parse_point(const std::string& text);  // "a,b" or "a,b,c,d" = (a+ic, b+id)

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kNoConvergence = 3 };

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dunkl::cli
