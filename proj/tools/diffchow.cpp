// Command-line front end; all work happens in the library's cli module.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "diffchow/cli.hpp"
#include "diffchow/errors.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw diffchow::UsageError("cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact difference-algebra engine: characteristic sets and difference Chow forms."};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field, ranking, format = "text";
  int bound = 0;
  std::uint64_t seed = 0;
  app.add_option("--field", field, "Coefficient field: Q or Qx (overrides the file)")
      ->check(CLI::IsMember({"Q", "Qx"}));
  app.add_option("--ranking", ranking, "orderly | orderly:a<b<... | elim:a<b<... (overrides the file)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--bound", bound, "Truncation bound for elimination (0 = automatic)")->check(CLI::NonNegativeNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Seed for the randomized pre-screen of intersect-generic");

  diffchow::CommandOptions opts;
  std::string file;
  std::string target, matrix;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"reduce", "Difference pseudo-remainder of --target against the other polynomials"},
      {"charset", "Characteristic set with dimension and order"},
      {"dimord", "Dimension, order and dimension polynomial"},
      {"intersect-generic", "Intersect with a generic difference polynomial"},
      {"chow", "Difference Chow form and companions"},
      {"verify", "Chow form followed by every structural check"},
      {"transform", "Chow form of the image under --matrix"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Session file ('-' for stdin)")->required();
    subs[name] = sub;
  }
  subs["reduce"]->add_option("--target", target, "Name of a polynomial in the file, or an expression")->required();
  subs["intersect-generic"]->add_option("--order", opts.order, "Order s of the generic polynomial");
  subs["intersect-generic"]->add_option("--degree", opts.degree, "Degree r of the generic polynomial")
      ->check(CLI::PositiveNumber);
  subs["intersect-generic"]->add_flag("--hyperplane", opts.hyperplane, "Use a generic hyperplane instead");
  subs["transform"]->add_option("--matrix", matrix, "Rows separated by ';', entries by ','")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& [name, sub] : subs)
    if (sub->parsed()) opts.command = name;
  if (!target.empty()) opts.target = target;
  if (!matrix.empty()) opts.matrix = matrix;
  opts.bound = bound;
  if (seed_opt->count()) opts.seed = seed;

  std::string text;
  try {
    text = read_input(file);
  } catch (const diffchow::Error& e) {
    std::cerr << "error (usage-error): " << e.what() << "\n";
    return 2;
  }
  std::optional<diffchow::Field> f;
  if (!field.empty()) f = diffchow::parse_field(field);
  std::optional<std::string> r;
  if (!ranking.empty()) r = ranking;

  const diffchow::Outcome o = diffchow::run_safely(text, f, r, opts);
  if (format == "machine") {
    std::cout << diffchow::render_machine(o);
    if (o.exit_code != 0) std::cerr << "error (" << o.error_kind << "): " << o.error_message << "\n";
  } else {
    for (const auto& l : o.text) std::cout << l << "\n";
    if (o.exit_code != 0) std::cerr << "error (" << o.error_kind << "): " << o.error_message << "\n";
  }
  return o.exit_code;
}
