// Command-line front end. Every command prints one JSON report.
//
// Exit codes: 0 success, 1 domain error, 2 parse or I/O error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "shoda/shoda.h"

namespace {

struct Config {
  std::string spec_path;
  std::string element_path;
  std::string output_path;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  int samples = 1000;
  bool in_completion = false;
  bool table = false;
  double re = 0.0;
  double im = 0.0;
  int path_rank = 0;
};

struct Failure {
  shoda_status status;
  std::string report;
};

using AlgebraPtr = std::unique_ptr<shoda_algebra, decltype(&shoda_algebra_free)>;
using ElementPtr = std::unique_ptr<shoda_element, decltype(&shoda_element_free)>;

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  shoda_string_free(s);
  return out;
}

[[noreturn]] void raise(shoda_status status, const std::string& detail) {
  nlohmann::json j{{"error", shoda_status_name(status)}, {"detail", detail}};
  throw Failure{status, j.dump()};
}

void check(shoda_status status, char* report) {
  std::string text = take(report);
  if (status != SHODA_OK) throw Failure{status, text};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(SHODA_IO_ERROR, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraPtr load_algebra(const std::string& path) {
  shoda_algebra* a = nullptr;
  char* err = nullptr;
  const shoda_status status = shoda_algebra_from_json(read_file(path).c_str(), &a, &err);
  check(status, err);
  return AlgebraPtr(a, shoda_algebra_free);
}

ElementPtr load_element(const shoda_algebra* algebra, const std::string& text) {
  shoda_element* e = nullptr;
  char* err = nullptr;
  const shoda_status status = shoda_element_from_json(algebra, text.c_str(), &e, &err);
  check(status, err);
  return ElementPtr(e, shoda_element_free);
}

// {"from": Element, "to": Element}
std::pair<ElementPtr, ElementPtr> load_endpoints(const shoda_algebra* algebra, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    raise(SHODA_PARSE_ERROR, e.what());
  }
  if (!j.is_object() || !j.contains("from") || !j.contains("to"))
    raise(SHODA_PARSE_ERROR, "path endpoints need \"from\" and \"to\"");
  return {load_element(algebra, j["from"].dump()), load_element(algebra, j["to"].dump())};
}

std::string run(const std::string& command, const Config& cfg) {
  shoda_options opts = shoda_default_options();
  opts.tol = cfg.tol;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;

  AlgebraPtr algebra = load_algebra(cfg.spec_path);
  char* out = nullptr;
  shoda_status status = SHODA_OK;

  if (command == "info") {
    status = shoda_info(algebra.get(), &out);
  } else if (command == "complete") {
    status = shoda_complete(algebra.get(), &opts, cfg.table ? 1 : 0, &out);
  } else if (command == "check") {
    status = shoda_check(algebra.get(), &opts, &out);
  } else if (command == "norm-audit") {
    status = shoda_norm_audit(algebra.get(), &opts, &out);
  } else if (command == "path") {
    auto [from, to] = load_endpoints(algebra.get(), cfg.element_path);
    status = cfg.path_rank > 0 ? shoda_rank_path(from.get(), to.get(), cfg.path_rank, &opts, &out)
                               : shoda_projection_path(from.get(), to.get(), &opts, &out);
  } else {
    ElementPtr element = load_element(algebra.get(), read_file(cfg.element_path));
    if (command == "decompose") {
      status = shoda_decompose(element.get(), &opts, cfg.in_completion ? 1 : 0, &out);
    } else if (command == "rank") {
      status = shoda_rank(element.get(), &opts, &out);
    } else if (command == "trace") {
      status = shoda_trace(element.get(), &out);
    } else if (command == "spectrum") {
      status = shoda_spectrum(element.get(), &opts, &out);
    } else {
      status = shoda_riesz(element.get(), cfg.re, cfg.im, &opts, &out);
    }
  }
  std::string report = take(out);
  if (status != SHODA_OK) throw Failure{status, report};
  return report;
}

int exit_code(shoda_status status) {
  if (status == SHODA_OK) return 0;
  if (status == SHODA_PARSE_ERROR || status == SHODA_IO_ERROR) return 2;
  return 1;
}

void write_report(const std::string& report, const std::string& path) {
  if (path.empty()) {
    std::cout << report << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cout << nlohmann::json{{"error", "IoError"}, {"detail", "cannot write " + path}}.dump() << '\n';
    std::exit(2);
  }
  out << report << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shoda-completions of block matrix algebras"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool needs_element) {
    sub->add_option("spec", cfg.spec_path, "algebra spec JSON, e.g. {\"blocks\": [2, 3]}")->required();
    if (needs_element) sub->add_option("element", cfg.element_path, "element JSON")->required();
    sub->add_option("--tol", cfg.tol, "zero threshold, relative")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--samples", cfg.samples, "sample count")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cfg.output_path, "write the report here instead of stdout");
  };

  add_common(app.add_subcommand("info", "summarize an algebra spec"), false);
  auto* complete = app.add_subcommand("complete", "build the Shoda-completion and identify it");
  add_common(complete, false);
  complete->add_flag("--table", cfg.table, "include the structure-constant table of A_S");
  add_common(app.add_subcommand("check", "decide Shoda-completeness"), false);
  auto* decompose = app.add_subcommand("decompose", "write a traceless element as a commutator");
  add_common(decompose, true);
  decompose->add_flag("--in-completion", cfg.in_completion, "decompose in the Shoda-completion");
  add_common(app.add_subcommand("rank", "spectral rank"), true);
  add_common(app.add_subcommand("trace", "spectral trace"), true);
  add_common(app.add_subcommand("spectrum", "spectrum with multiplicities"), true);
  auto* riesz = app.add_subcommand("riesz", "Riesz projection of a spectral value");
  add_common(riesz, true);
  riesz->add_option("--re", cfg.re, "real part of the spectral value")->required();
  riesz->add_option("--im", cfg.im, "imaginary part of the spectral value");
  add_common(app.add_subcommand("norm-audit", "audit the extension norm"), false);
  auto* path = app.add_subcommand("path", "path of rank-one idempotents (or rank-n elements with --rank)");
  add_common(path, true);
  path->add_option("--rank", cfg.path_rank, "build a rank-n path instead")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    write_report(run(command, cfg), cfg.output_path);
    return 0;
  } catch (const Failure& f) {
    write_report(f.report, cfg.output_path);
    return exit_code(f.status);
  }
}
