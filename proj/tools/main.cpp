// dichromate: NL-coflow, NL-flow and dichromate polynomials of digraphs and
// rational oriented matroids.

#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "dichromate/cli.hpp"

using dichromate::cli::Command;
using dichromate::cli::InputKind;
using dichromate::cli::Oracle;
using dichromate::cli::OutputFormat;
using dichromate::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"NL-coflow, NL-flow and dichromate polynomials of digraphs and oriented matroids"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::string oracle;
  std::string kind;
  std::vector<std::size_t> basis;
  unsigned k = 0;

  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", config.cap, "Largest ground set (arcs or elements) to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--kind", kind, "Input kind; sniffed from the file when omitted")
      ->check(CLI::IsMember({"digraph", "matrix"}));

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", config.input_path, "Digraph text file or JSON matrix file")->required();
  };

  auto* coflow = app.add_subcommand("coflow", "NL-coflow polynomial psi");
  input(coflow);
  coflow->add_option("--oracle", oracle, "Route: graphic (digraphs), matroid, or both")
      ->check(CLI::IsMember({"graphic", "matroid", "both"}));

  auto* flow = app.add_subcommand("flow", "NL-flow polynomial phi");
  input(flow);

  auto* dichromate = app.add_subcommand("dichromate", "Trivariate dichromate Omega");
  input(dichromate);
  dichromate->add_option("--basis", basis, "1-based basis columns, e.g. 1,2")->delimiter(',');

  auto* colorings = app.add_subcommand("colorings", "Count acyclic colorings by exhaustion");
  input(colorings);
  colorings->add_option("--k", k, "Number of colors")->required()->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Verify the structural identities on the input");
  input(check);
  check->add_option("--basis", basis, "1-based basis columns for the union matroid")->delimiter(',');
  check->add_flag("--all-bases", config.all_bases, "Check every basis instead of one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dichromate::cli::kExitParse;
  }

  if (*coflow) config.command = Command::Coflow;
  else if (*flow) config.command = Command::Flow;
  else if (*dichromate) config.command = Command::Dichromate;
  else if (*colorings) config.command = Command::Colorings;
  else config.command = Command::Check;

  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (!kind.empty()) config.input_kind = kind == "digraph" ? InputKind::Digraph : InputKind::Matrix;
  if (!oracle.empty()) {
    static const std::map<std::string, Oracle> kOracles{
        {"graphic", Oracle::Graphic}, {"matroid", Oracle::Matroid}, {"both", Oracle::Both}};
    config.oracle = kOracles.at(oracle);
  }
  if (!basis.empty()) config.basis = basis;
  if (k > 0) config.k = k;

  return dichromate::cli::run(config, std::cout, std::cerr);
}
