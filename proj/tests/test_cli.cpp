#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "dichromate/cli.hpp"
#include "dichromate/tri_poly.hpp"

using namespace dichromate;
using namespace dichromate::cli;

namespace {

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(RunConfig config) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(config, out, err);
  return {status, out.str(), err.str()};
}

RunConfig config_for(Command command, const std::string& path) {
  RunConfig c;
  c.command = command;
  c.input_path = path;
  return c;
}

std::string write_temp(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("dichromate_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("coflow on the directed 3-cycle") {
  const Outcome o = invoke(config_for(Command::Coflow, data("cycle3.dig")));
  CHECK(o.status == kExitOk);
  CHECK(o.out == "x^2 - 1\n");
}

TEST_CASE("coflow with both routes") {
  RunConfig c = config_for(Command::Coflow, data("mixed4.dig"));
  c.oracle = Oracle::Both;
  const Outcome o = invoke(c);
  CHECK(o.status == kExitOk);
  CHECK(o.out.find("agree: yes") != std::string::npos);

  RunConfig m = config_for(Command::Coflow, data("coloop.json"));
  m.oracle = Oracle::Graphic;
  CHECK(invoke(m).status == kExitParse);
}

TEST_CASE("dichromate on the coloop matrix") {
  const Outcome o = invoke(config_for(Command::Dichromate, data("coloop.json")));
  CHECK(o.status == kExitOk);
  CHECK(o.out == "x - x*y\nbasis: {1}\n");
}

TEST_CASE("dichromate basis handling") {
  RunConfig c = config_for(Command::Dichromate, data("cycle3.dig"));
  c.basis = std::vector<std::size_t>{2, 3};
  const Outcome o = invoke(c);
  CHECK(o.status == kExitOk);
  CHECK(o.out.find("basis: {2,3}") != std::string::npos);

  c.basis = std::vector<std::size_t>{1};
  CHECK(invoke(c).status == kExitParse);
  c.basis = std::vector<std::size_t>{0, 1};
  CHECK(invoke(c).status == kExitParse);
}

TEST_CASE("dichromate refuses inputs above half the cap") {
  RunConfig c = config_for(Command::Dichromate, data("mixed4.dig"));
  c.cap = 10;
  const Outcome o = invoke(c);
  CHECK(o.status == kExitResource);
  CHECK(o.err.find("cap") != std::string::npos);
}

TEST_CASE("colorings") {
  RunConfig c = config_for(Command::Colorings, data("digon.dig"));
  c.k = 2;
  const Outcome o = invoke(c);
  CHECK(o.status == kExitOk);
  CHECK(o.out == "2\n");

  RunConfig missing = config_for(Command::Colorings, data("digon.dig"));
  CHECK(invoke(missing).status == kExitParse);
  RunConfig matrix = config_for(Command::Colorings, data("coloop.json"));
  matrix.k = 2;
  CHECK(invoke(matrix).status == kExitParse);
}

TEST_CASE("flow") {
  CHECK(invoke(config_for(Command::Flow, data("cycle3.dig"))).out == "x\n");
  CHECK(invoke(config_for(Command::Flow, data("coloop.json"))).out == "0\n");
}

TEST_CASE("check passes on the sample inputs") {
  for (const char* name : {"cycle3.dig", "digon.dig", "coloop.json", "mixed4.dig"}) {
    RunConfig c = config_for(Command::Check, data(name));
    c.all_bases = true;
    const Outcome o = invoke(c);
    CHECK_MESSAGE(o.status == kExitOk, name << "\n" << o.out);
    CHECK(o.out.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("JSON output follows the polynomial schema") {
  RunConfig c = config_for(Command::Dichromate, data("digon.dig"));
  c.format = OutputFormat::Json;
  const Outcome o = invoke(c);
  REQUIRE(o.status == kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["text"] == "x^2 - x*z");
  CHECK(j["basis"] == nlohmann::json::array({1}));
  REQUIRE(j["polynomial"].is_array());
  for (const auto& term : j["polynomial"]) {
    CHECK(term["x"].is_number_unsigned());
    CHECK(term["y"].is_number_unsigned());
    CHECK(term["z"].is_number_unsigned());
    CHECK((term["c"].is_number_integer() || term["c"].is_string()));
  }
  CHECK(TriPoly::from_json(j["polynomial"]).to_string() == "x^2 - x*z");
}

TEST_CASE("parse errors") {
  const std::string bad_json = write_temp("bad.json", "{\"rows\": [[1, 2],\n [3]]}");
  CHECK(invoke(config_for(Command::Flow, bad_json)).status == kExitParse);

  const std::string broken = write_temp("broken.json", "{\"rows\": [[1,\n 2]\n");
  const Outcome b = invoke(config_for(Command::Flow, broken));
  CHECK(b.status == kExitParse);
  CHECK(b.err.find("line") != std::string::npos);

  const std::string bad_rational = write_temp("rational.json", "{\"rows\": [[\"1/0\"]]}");
  CHECK(invoke(config_for(Command::Flow, bad_rational)).status == kExitParse);

  const std::string bad_digraph = write_temp("bad.dig", "digraph 2\n0 7\n");
  const Outcome d = invoke(config_for(Command::Coflow, bad_digraph));
  CHECK(d.status == kExitParse);
  CHECK(d.err.find("line 2") != std::string::npos);

  CHECK(invoke(config_for(Command::Flow, "/nonexistent/file")).status == kExitParse);
}

TEST_CASE("matrix parsing") {
  CHECK(parse_matrix_text("{\"rows\": [[1, -1]]}").cols() == 2);
  const RatMatrix half = parse_matrix_text("{\"rows\": [[\"1/2\"]]}");
  CHECK(half(0, 0) == Rational(1, 2));
  const RatMatrix id = parse_matrix_text("{\"rows\": [[1, 0], [0, 1]]}");
  CHECK(id(0, 0) == 1);
  CHECK(id(1, 0) == 0);
  CHECK_THROWS_AS(parse_matrix_text("{\"rows\": [[1], [1, 2]]}"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("{\"rows\": [[1.5]]}"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("[1]"), ParseError);
}

TEST_CASE("outputs are deterministic") {
  for (auto command : {Command::Coflow, Command::Flow, Command::Dichromate, Command::Check}) {
    for (auto format : {OutputFormat::Text, OutputFormat::Json}) {
      RunConfig c = config_for(command, data("mixed4.dig"));
      c.format = format;
      const Outcome first = invoke(c);
      const Outcome second = invoke(c);
      CHECK(first.out == second.out);
      CHECK(first.status == second.status);
    }
  }
}
