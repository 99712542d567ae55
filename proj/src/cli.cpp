#include "dichromate/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "dichromate/checks.hpp"
#include "dichromate/nl_polynomials.hpp"

namespace dichromate::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

InputKind sniff(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    return line.compare(start, 7, "digraph") == 0 ? InputKind::Digraph : InputKind::Matrix;
  }
  return InputKind::Matrix;
}

std::string basis_string(const std::vector<std::size_t>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + std::to_string(labels[i]);
  return s + "}";
}

struct Input {
  InputKind kind;
  std::optional<Digraph> digraph;
  RealizedOM om;
};

Input load(const RunConfig& config) {
  const std::string text = read_file(config.input_path);
  const InputKind kind = config.input_kind.value_or(sniff(text));
  if (kind == InputKind::Digraph) {
    Digraph d = parse_digraph(text);
    RealizedOM om = matroid_from_digraph(d);
    return {kind, std::move(d), std::move(om)};
  }
  return {kind, std::nullopt, realize(parse_matrix_text(text))};
}

void require_within_cap(std::size_t elements, std::size_t cap, const std::string& what) {
  if (elements > cap)
    throw ResourceError(what + " has " + std::to_string(elements) + " elements, above the cap of " +
                        std::to_string(cap));
}

void emit_polynomial(std::ostream& out, OutputFormat format, const std::string& command,
                     const std::string& route, const TriPoly& p) {
  if (format == OutputFormat::Text) {
    out << p.to_string() << '\n';
    return;
  }
  json j = {{"command", command}, {"route", route}, {"text", p.to_string()}, {"polynomial", p.to_json()}};
  out << j.dump() << '\n';
}

int run_coflow(const RunConfig& config, const Input& input, std::ostream& out, std::ostream& err) {
  Oracle oracle = config.oracle.value_or(input.kind == InputKind::Digraph ? Oracle::Graphic : Oracle::Matroid);
  if (oracle != Oracle::Matroid && !input.digraph) {
    err << "error: --oracle graphic|both needs a digraph input\n";
    return kExitParse;
  }
  if (oracle == Oracle::Graphic) {
    emit_polynomial(out, config.format, "coflow", "graphic", nl_coflow_graphic(*input.digraph, config.cap));
    return kExitOk;
  }
  require_within_cap(input.om.size(), config.cap, "matroid");
  const TriPoly matroid = nl_coflow_matroid(input.om);
  if (oracle == Oracle::Matroid) {
    emit_polynomial(out, config.format, "coflow", "matroid", matroid);
    return kExitOk;
  }
  const TriPoly graphic = nl_coflow_graphic(*input.digraph, config.cap);
  const bool agree = graphic == matroid;
  if (config.format == OutputFormat::Text) {
    out << "graphic: " << graphic.to_string() << '\n'
        << "matroid: " << matroid.to_string() << '\n'
        << "agree: " << (agree ? "yes" : "no") << '\n';
  } else {
    json j = {{"command", "coflow"},
              {"route", "both"},
              {"graphic", {{"text", graphic.to_string()}, {"polynomial", graphic.to_json()}}},
              {"matroid", {{"text", matroid.to_string()}, {"polynomial", matroid.to_json()}}},
              {"agree", agree}};
    out << j.dump() << '\n';
  }
  if (!agree) {
    err << "error: invariant violated: graphic and matroid NL-coflow polynomials differ\n";
    return kExitContract;
  }
  return kExitOk;
}

int run_dichromate(const RunConfig& config, const Input& input, std::ostream& out) {
  require_within_cap(2 * input.om.size(), config.cap, "union matroid");
  std::optional<std::vector<std::size_t>> basis;
  if (config.basis) {
    basis.emplace();
    for (auto b : *config.basis) {
      if (b == 0) throw InvalidBasisError("basis columns are 1-based");
      basis->push_back(b - 1);
    }
  }
  const DichromateResult result = dichromate(input.om, basis);
  std::vector<std::size_t> labels;
  for (auto b : result.basis) labels.push_back(input.om.labels()[b]);
  if (config.format == OutputFormat::Text) {
    out << result.omega.to_string() << '\n' << "basis: " << basis_string(labels) << '\n';
  } else {
    json j = {{"command", "dichromate"},
              {"text", result.omega.to_string()},
              {"polynomial", result.omega.to_json()},
              {"basis", labels}};
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int run_colorings(const RunConfig& config, const Input& input, std::ostream& out, std::ostream& err) {
  if (!input.digraph) {
    err << "error: colorings needs a digraph input\n";
    return kExitParse;
  }
  if (!config.k || *config.k == 0) {
    err << "error: colorings needs --k with a positive integer\n";
    return kExitParse;
  }
  const BigInt count = count_acyclic_colorings(*input.digraph, *config.k);
  if (config.format == OutputFormat::Text) {
    out << count.get_str() << '\n';
  } else {
    json j = {{"command", "colorings"}, {"k", *config.k}, {"count", count.get_str()}};
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int run_check(const RunConfig& config, const Input& input, std::ostream& out) {
  CheckOptions options;
  options.cap = config.cap;
  options.all_bases = config.all_bases;
  if (config.basis) {
    options.basis.emplace();
    for (auto b : *config.basis) {
      if (b == 0) throw InvalidBasisError("basis columns are 1-based");
      options.basis->push_back(b - 1);
    }
    // Validates the basis before any other work.
    standard_form(rational_matrix(input.om), options.basis);
  }
  const auto results = run_checks(input.om, input.digraph, options);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  if (config.format == OutputFormat::Text) {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed) out << ": " << r.detail;
      out << '\n';
    }
    out << passed << "/" << results.size() << " checks passed\n";
  } else {
    json list = json::array();
    for (const auto& r : results) list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out << json{{"command", "check"}, {"results", list}, {"passed", passed == results.size()}}.dump() << '\n';
  }
  return passed == results.size() ? kExitOk : kExitCheckFailed;
}

}  // namespace

RatMatrix parse_matrix_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, column);
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw ParseError("expected an object with a \"rows\" array", 1, 1);
  const auto& rows = j["rows"];
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array()) throw ParseError("row " + std::to_string(i + 1) + " is not an array", 1, 1);
    if (rows[i].size() != c)
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(c),
                       1, 1);
    for (std::size_t k = 0; k < c; ++k) {
      const auto& v = rows[i][k];
      const std::string where = "entry (" + std::to_string(i + 1) + ", " + std::to_string(k + 1) + ")";
      if (v.is_number_integer()) {
        entries.emplace_back(v.is_number_unsigned() ? BigInt(std::to_string(v.get<unsigned long>()))
                                                    : BigInt(std::to_string(v.get<long>())));
      } else if (v.is_string()) {
        try {
          entries.push_back(parse_rational(v.get<std::string>()));
        } catch (const std::invalid_argument& e) {
          throw ParseError(where + ": " + e.what(), 1, 1);
        }
      } else {
        throw ParseError(where + " must be an integer or a \"p/q\" string", 1, 1);
      }
    }
  }
  return RatMatrix(r, c, std::move(entries));
}

RatMatrix parse_matrix(const std::string& path) { return parse_matrix_text(read_file(path)); }

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Input input = load(config);
    switch (config.command) {
      case Command::Coflow:
        return run_coflow(config, input, out, err);
      case Command::Flow: {
        require_within_cap(input.om.size(), config.cap, "matroid");
        emit_polynomial(out, config.format, "flow", "matroid", nl_flow_matroid(input.om));
        return kExitOk;
      }
      case Command::Dichromate:
        return run_dichromate(config, input, out);
      case Command::Colorings:
        return run_colorings(config, input, out, err);
      case Command::Check:
        return run_check(config, input, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidBasisError& e) {
    err << "invalid basis: " << e.what() << '\n';
    return kExitParse;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitContract;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitContract;
}

}  // namespace dichromate::cli
