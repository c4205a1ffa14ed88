#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace embhom::cli {

inline constexpr const char* kReportSchema = "embhom.report/1";

enum ExitCode : int { kOk = 0, kBadInput = 2, kResourceCap = 3, kCheckFailed = 4 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string field = "Q";  // "Q" or a prime
  std::string kind = "inf"; // homology: inf|sup|ambient; persist: inf|sup
  bool directed = false;    // read "edges" rows as directed words
  std::optional<std::size_t> max_degree;
  std::size_t n_max = 3;
  bool all_pairs = false;
  std::string table_path;   // persist: CSV table
  std::string barcode_path; // persist: barcode JSON
  std::string output_path;  // report; empty means stdout
  std::size_t max_vertices = 10;
  std::size_t max_ambient = 16;
  std::uint64_t seed = 20240607;
  // bundle-order
  std::string space = "euclidean";
  std::uint64_t m = 0, genus = 0, k = 0, n = 0;
  std::optional<std::uint64_t> n_embed;
  // embed-bound
  std::uint64_t t = 0;

  // Applies EMBHOM_MAX_VERTICES and EMBHOM_MAX_AMBIENT when set.
  void apply_environment();
  // Throws DomainError on a bad field, kind or cap.
  void validate() const;
};

struct Report {
  std::string command;
  nlohmann::json results;
  std::vector<std::string> warnings;
  double timing_ms = 0.0;
  int exit_code = kOk;

  nlohmann::json to_json() const;
};

Report run(const RunConfig& config);

// Writes the report as indented JSON to `path`, or stdout when empty.
void emit_report(const Report& report, const std::string& path);

}  // namespace embhom::cli
