#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grady/grading.hpp"

namespace grady {

using json = nlohmann::json;

struct GradingSpec {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;
  /// One degree per variable, torsion residues reduced.
  std::vector<Hdeg> degrees;

  bool operator==(const GradingSpec&) const = default;
};

struct MatrixSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> entries;
  std::optional<std::vector<Hdeg>> row_degrees;
  std::optional<std::vector<Hdeg>> col_degrees;

  bool operator==(const MatrixSpec&) const = default;
};

struct CertificateSpec {
  std::vector<std::string> component;
  std::optional<std::vector<std::string>> radical;

  bool operator==(const CertificateSpec&) const = default;
};

struct Command {
  std::string op;
  std::vector<std::string> args;
  json options = json::object();

  bool operator==(const Command&) const = default;
};

/// A validated job. Polynomial strings are stored in canonical printed form,
/// so a job survives a round trip through job_to_json and parse_job.
struct Job {
  std::string field;  // "Q" or "F<p>"
  std::vector<std::string> vars;
  GradingSpec grading;
  std::map<std::string, std::vector<std::string>> ideals;
  std::map<std::string, std::string> polys;
  std::map<std::string, MatrixSpec> matrices;
  std::map<std::string, std::vector<CertificateSpec>> certificates;
  Command command;

  bool operator==(const Job&) const = default;
};

/// Throws SchemaError (with a field path) or ParseError.
Job parse_job(std::string_view text);
json job_to_json(const Job& job);

enum class Format { json, text };

struct ResultDocument {
  std::string status = "ok";  // ok | unsupported | error
  std::string op;
  /// "unsupported-class", "input-error", "internal-error" or empty.
  std::string reason;
  std::string message;
  json payload = json::object();
  std::optional<double> timing_ms;

  bool operator==(const ResultDocument&) const = default;
};

ResultDocument execute_job(const Job& job, bool with_timing = false);
/// Error document for a job that failed to parse.
ResultDocument input_error(const std::string& message);

std::string render_result(const ResultDocument& doc, Format format);
ResultDocument parse_result(std::string_view text);

/// 0 ok, 1 internal failure or failed verification verdict, 2 input error,
/// 3 unsupported class.
int exit_code(const ResultDocument& doc);

}  // namespace grady
