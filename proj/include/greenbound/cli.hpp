#pragma once

#include <iosfwd>
#include <string>

#include "greenbound/green_assembly.hpp"
#include "greenbound/modular_group.hpp"

namespace greenbound::cli {

enum class Command { bound, count, fsup, shc, selftest };
enum class OutputFormat { text, json };

enum ExitCode : int {
  kOk = 0,
  kSelftestFailed = 1,
  kUsage = 2,
  kGenusZero = 3,
  kCertificationFailed = 4,
};

struct RunConfig {
  Command command = Command::selftest;
  Family family = Family::gamma0;
  int level = 11;
  ConstantsMode constants = ConstantsMode::paper;
  double grid_step = 0.01;
  unsigned threads = 0;
  bool use_genus = false;
  double A = -3.00e4;
  double B = 1.58e4;
  // count
  double threshold = 17.0;
  int verify_samples = 8;
  // fsup
  double a = 1.44;
  long long count_bound = 0;  // 0: take from constants mode
  int genus = 1;
  // shc
  double s = 0.0;
  double k = 2.0;
  double quad_tol = 1e-11;
  double series_tol = 1e-16;
  OutputFormat format = OutputFormat::text;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

/// Parses argv, runs the command and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace greenbound::cli
