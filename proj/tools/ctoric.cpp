// Command line front end: one cone file in, one report out.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ctoric/corpus.hpp"
#include "ctoric/pipeline.hpp"

namespace {

using namespace ctoric;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + output);
  out << text;
}

int write_corpus(const std::string& dir, std::uint64_t seed, std::size_t twists) {
  if (dir.empty()) throw UsageError("corpus requires --output <directory>");
  std::filesystem::create_directories(dir);
  auto all = base_corpus();
  for (auto& t : twisted_corpus(seed, twists)) all.push_back(std::move(t));
  for (const auto& c : all) {
    std::ofstream out(std::filesystem::path(dir) / (c.file + ".json"), std::ios::binary);
    if (!out) throw UsageError("cannot write into " + dir);
    out << cone_to_json(c.cone).dump() << "\n";
  }
  std::cout << "wrote " << all.size() << " cones to " << dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of contact toric manifolds from their moment cones"};
  app.require_subcommand(1);

  std::string cone_path, format = "text", output;
  unsigned max_degree = 0;
  bool rational = false;
  std::size_t rank = 0;
  std::uint64_t seed = kCorpusSeed;
  std::size_t twists = 3;

  for (const char* name :
       {"validate", "normalize", "equivariant", "toric", "partial", "contact", "stabilizers", "report"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("cone", cone_path, "cone file (JSON)")->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-degree", max_degree, "highest polynomial degree to compute");
    sub->add_flag("--rational", rational, "rational coefficients");
    sub->add_option("--output", output, "write the report here instead of standard output");
    if (std::string(name) == "partial") sub->add_option("--rank", rank, "rank of the subtorus")->required();
  }
  auto* corpus = app.add_subcommand("corpus", "write the bundled cones and their twisted variants");
  corpus->add_option("--output", output, "target directory")->required();
  corpus->add_option("--seed", seed, "seed for the twisted variants");
  corpus->add_option("--twists", twists, "twisted copies per cone");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "corpus") return write_corpus(output, seed, twists);

    RunOptions opt;
    opt.rational = rational;
    if (sub->count("--max-degree")) opt.max_degree = max_degree;
    if (name == "partial") opt.subtorus_rank = rank;

    ConeFile file;
    try {
      file = parse_cone(read_file(cone_path));
    } catch (const ConeError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitValidation;
    }
    RunResult res = run_command(*parse_command(name), file, opt);
    emit(format == "json" ? to_json_text(res.report) : render_text(res.report), output);
    if (res.report.error) std::cerr << "error: " << *res.report.error << "\n";
    return res.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
