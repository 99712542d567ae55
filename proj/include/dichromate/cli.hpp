#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dichromate/digraph.hpp"
#include "dichromate/exact_arith.hpp"

namespace dichromate::cli {

enum class Command { Coflow, Flow, Dichromate, Colorings, Check };
enum class InputKind { Digraph, Matrix };
enum class OutputFormat { Text, Json };
enum class Oracle { Graphic, Matroid, Both };

struct RunConfig {
  Command command = Command::Coflow;
  std::string input_path;
  std::optional<InputKind> input_kind;  // sniffed from the file if absent
  std::optional<std::vector<std::size_t>> basis;  // 1-based columns
  std::optional<unsigned> k;
  OutputFormat format = OutputFormat::Text;
  std::size_t cap = kDefaultEnumerationCap;
  std::optional<Oracle> oracle;  // coflow only
  bool all_bases = false;  // check only
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitContract = 4;

// {"rows": [[...], ...]} with integer or "p/q" string entries.
RatMatrix parse_matrix_text(const std::string& text);
RatMatrix parse_matrix(const std::string& path);

// Runs one command. Results go to out, diagnostics to err; returns the exit
// status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dichromate::cli
