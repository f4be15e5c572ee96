#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "grady/acceptance.hpp"
#include "grady/cli_io.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// verify runs on the first ideal named by the job's arguments, or on the
// first ideal in the job when none is.
void retarget_to_verify(grady::Job& job) {
  std::string target;
  for (const auto& a : job.command.args)
    if (job.ideals.count(a)) {
      target = a;
      break;
    }
  if (target.empty() && !job.ideals.empty()) target = job.ideals.begin()->first;
  if (target.empty()) throw grady::SchemaError("ideals", "verify needs at least one ideal");
  job.command = {"verify", {target}, grady::json{{"degree_bound", job.command.options.value("degree_bound", 8)}}};
}

int run_job(const std::string& path, bool verify, std::optional<grady::Format> format, bool timing) {
  grady::ResultDocument doc;
  try {
    auto job = grady::parse_job(slurp(path));
    if (!format) format = job.command.options.value("format", "json") == "text" ? grady::Format::text : grady::Format::json;
    if (verify) retarget_to_verify(job);
    doc = grady::execute_job(job, timing);
  } catch (const grady::Error& e) {
    doc = grady::input_error(e.what());
  } catch (const std::runtime_error& e) {
    doc = grady::input_error(e.what());
  }
  if (doc.status != "ok") std::cerr << "grady: " << doc.reason << ": " << doc.message << "\n";
  std::cout << grady::render_result(doc, format.value_or(grady::Format::json));
  return grady::exit_code(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grady: homogeneous ideals, star operations and G-primary decompositions"};
  app.require_subcommand(1);

  std::string job_path;
  std::string format_name = "json";
  std::uint64_t seed = 0;
  bool timing = false;

  auto* run = app.add_subcommand("run", "execute a JSON job file ('-' for stdin)");
  run->add_option("jobfile", job_path)->required();
  run->add_option("--format", format_name)->check(CLI::IsMember({"json", "text"}));
  run->add_option("--seed", seed, "seed for randomized operations");
  run->add_flag("--timing", timing, "include wall time in the result");

  auto* verify = app.add_subcommand("verify", "run the theorem suite and the oracle on the job's ideal");
  verify->add_option("jobfile", job_path)->required();
  verify->add_option("--format", format_name)->check(CLI::IsMember({"json", "text"}));

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  std::optional<grady::Format> format;
  if (run->get_option("--format")->count() || verify->get_option("--format")->count())
    format = format_name == "text" ? grady::Format::text : grady::Format::json;

  if (*run) return run_job(job_path, false, format, timing);
  if (*verify) return run_job(job_path, true, format, false);

  std::size_t failed = 0;
  grady::run_acceptance(seed ? seed : 20240611, [&](const grady::CriterionResult& r) {
    std::cout << grady::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  });
  return failed ? 1 : 0;
}
