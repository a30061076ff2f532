#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schur0::cli {

struct CheckRecord {
  std::string name;
  bool pass = true;
  std::string detail;
  std::int64_t elapsed_ms = 0;
};

struct VerifyOptions {
  int max_n = 3;
  int max_r = 3;
  std::size_t max_dim = 5000;
  /// Negates one structure constant of every S₀ table the harness builds.
  bool inject_fault = false;
};

inline const std::vector<std::string> kSuites = {"all", "filtration", "presentation", "maintheorem", "ideals", "hecke", "ntl"};

/// Runs one suite (or "all"). Throws std::invalid_argument for an unknown suite.
std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyOptions& options);

std::string report_json(const std::vector<CheckRecord>& checks);

}  // namespace schur0::cli
