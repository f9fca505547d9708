#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "semiholes/cli.hpp"
#include "semiholes/errors.hpp"
#include "semiholes/io.hpp"
#include "semiholes/models.hpp"

using namespace semiholes;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("parse_mat") {
  CHECK(parse_mat("1 2\n2 3\n") == IntMat{{2, 3}});
  CHECK(parse_mat("2 2\n1 0\n0 1\n") == IntMat::identity(2));
  CHECK(parse_mat("# comment\n\n2 1\n-4 # trailing\n+5") == IntMat{{-4}, {5}});
  CHECK(parse_mat("1 1\n123456789012345678901234567890\n")(0, 0) == Integer("123456789012345678901234567890"));
}

TEST_CASE("parse_mat diagnostics") {
  auto message = [](const std::string& text) {
    try {
      parse_mat(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("2 2\n1 0\n0\n") == "line 3: row 2 has 1 of 2 entries");
  CHECK(message("2 2\n1 0\n0 1 7\n") == "line 3, column 5: row 2 has 3 of 2 entries");
  CHECK(message("2 2\n1 x\n0 1\n") == "line 2, column 3: not an integer: 'x'");
  CHECK(message("2\n1 0\n") == "line 1: header must be \"rows cols\", found 1 tokens");
  CHECK(message("1 2\n1 0\n3 4\n") == "line 3: expected 1 rows, found 2");
  CHECK(message("3 2\n1 0\n3 4\n") == "line 3: expected 3 rows, found 2");
  CHECK(message("-1 2\n") == "line 1, column 1: dimension out of range: -1");
  CHECK(message("") == "line 1: empty input, expected header \"rows cols\"");
  try {
    parse_mat("1 1\n1.5\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
}

TEST_CASE("render and parse round trip") {
  for (std::size_t d : {2, 3, 5}) CHECK(parse_mat(render_mat(cdem_matrix(d).matrix)) == cdem_matrix(d).matrix);
  CHECK(parse_mat(render_mat(lop_matrix(4).lifted)) == lop_matrix(4).lifted);
  CHECK(render_mat(IntMat{{2, 3}}) == "1 2\n2 3\n");
  CHECK(render_vec(IntVec{1, -2}) == "[1 -2]");
}

TEST_CASE("text reports") {
  CHECK(render_report(hole_report(SemigroupProblem(IntMat{{1, 1}, {0, 1}})), ReportFormat::Text) ==
        "Found 0 fundamental holes.\n");
  CHECK(render_report(hole_report(SemigroupProblem(IntMat{{2, 3}})), ReportFormat::Text) ==
        "Found 1 fundamental holes.\nStandard pairs of [1]:\n  1: root [0 0] free {}\n");
  CHECK(render_report(hole_report(SemigroupProblem(IntMat{{1, 1, 1}, {0, 1, 3}})), ReportFormat::Text) ==
        "Found 1 fundamental holes.\nStandard pairs of [1 2]:\n  1: root [0 0 0] free {x3}\n");
}

TEST_CASE("json reports") {
  const HoleReport r = hole_report(SemigroupProblem(IntMat{{1, 1, 1}, {0, 1, 3}}));
  const auto doc = nlohmann::json::parse(render_report(r, ReportFormat::Json));
  CHECK(doc.size() == 4);
  CHECK(doc["matrix_dims"] == nlohmann::json({2, 3}));
  CHECK(doc["saturated"] == false);
  CHECK(doc["fundamental_holes"] == nlohmann::json::parse("[[1, 2]]"));
  REQUIRE(doc["families"].size() == 1);
  CHECK(doc["families"][0]["fundamental"] == nlohmann::json({1, 2}));
  CHECK(doc["families"][0]["base"] == nlohmann::json({1, 2}));
  CHECK(doc["families"][0]["free_columns"] == nlohmann::json({3}));
  CHECK(doc["families"][0].size() == 3);
}

TEST_CASE("cli holes") {
  const std::string cdem3 = run({"gen", "cdem", "3"}).out;
  const Run text = run({"holes", "-"}, cdem3);
  CHECK(text.code == 0);
  CHECK(text.out.rfind("Found 3 fundamental holes.\nStandard pairs of [0 1 1 0 1 1 1]:\n", 0) == 0);
  CHECK(run({"holes", "-", "--jobs", "3"}, cdem3).out == text.out);
  CHECK(run({"holes", "-", "--no-trick"}, cdem3).code == 0);

  const Run json = run({"holes", "-", "--format", "json"}, cdem3);
  CHECK(nlohmann::json::parse(json.out)["fundamental_holes"].size() == 3);

  const Run one = run({"holes", "-", "--only-hole", "2"}, cdem3);
  CHECK(one.out.rfind("Found 3 fundamental holes.\nStandard pairs of [1 0 1 1 0 1 1]:\n", 0) == 0);
  CHECK(count_lines(one.out) == 4);
  CHECK(run({"holes", "-", "--only-hole", "[1,0,1,1,0,1,1]"}, cdem3).out == one.out);
  CHECK(run({"holes", "-", "--only-hole", "4"}, cdem3).code == 2);
  CHECK(run({"holes", "-", "--only-hole", "1,1,1,1,1,1,1"}, cdem3).code == 2);

  const Run dc = run({"holes", "-", "--degree-check", "6"}, cdem3);
  CHECK(dc.code == 0);
  CHECK(dc.err.find("0 uncovered, 0 spurious") != std::string::npos);
  CHECK(run({"holes", "-", "--degree-check", "6", "--only-hole", "1"}, cdem3).code == 2);
}

TEST_CASE("cli jobs default from the environment") {
  const std::string cdem3 = run({"gen", "cdem", "3"}).out;
  setenv("HASE_JOBS", "2", 1);
  const Run r = run({"holes", "-"}, cdem3);
  unsetenv("HASE_JOBS");
  CHECK(r.code == 0);
  CHECK(r.out == run({"holes", "-"}, cdem3).out);
}

TEST_CASE("cli other subcommands") {
  const std::string cdem3 = run({"gen", "cdem", "3"}).out;
  CHECK(count_lines(run({"fundamental", "-"}, cdem3).out) == 3);
  CHECK(count_lines(run({"hilbert", "-"}, cdem3).out) == 12);
  CHECK(run({"frobenius", "6", "9", "20"}).out == "43\n");
  CHECK(run({"frobenius", "2", "4"}).code == 2);
  CHECK(run({"frobenius", "3", "-5"}).code == 2);

  const std::string T = "2 3\n1 1 1\n0 1 3\n";
  CHECK(run({"member", "-", "1", "2"}, T).out == "hole\n");
  CHECK(run({"member", "-", "1", "2", "--exit-status"}, T).code == 1);
  const Run in = run({"member", "-", "2", "2", "--exit-status"}, T);
  CHECK(in.code == 0);
  CHECK(in.out.rfind("in-semigroup [", 0) == 0);
  CHECK(run({"member", "-", "-1", "0"}, T).out.rfind("outside-cone", 0) == 0);
  CHECK(run({"member", "-", "1"}, T).code == 2);
  // Rows as generators.
  CHECK(run({"member", "-", "1", "2", "--transpose"}, "3 2\n1 0\n1 1\n1 3\n").out == "hole\n");
  CHECK(run({"member", "-", "1", "1", "--lattice", "generated"}, "2 2\n2 0\n0 2\n").out.rfind("outside-lattice", 0) == 0);

  const std::string reeve = "3 4\n0 1 0 1\n0 0 1 1\n0 0 0 2\n";
  CHECK(run({"idp", "-"}, reeve).out == "false\ncertificate [1 1 1 2]\n");
  CHECK(run({"idp", "-", "--exit-status"}, reeve).code == 1);
  const Run lop = run({"gen", "lop", "3", "--vertices"});
  CHECK(lop.out.rfind("3 6\n", 0) == 0);
  CHECK(run({"idp", "-", "--exit-status"}, lop.out).out == "true\n");
  CHECK(run({"gen", "lop", "3"}).out.rfind("4 6\n", 0) == 0);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"holes"}).code == 2);
  CHECK(run({"holes", "-", "--bogus"}, "1 1\n1\n").code == 2);
  CHECK(run({"holes", "-", "--format", "xml"}, "1 1\n1\n").code == 2);
  CHECK(run({"holes", "/nonexistent/file.mat"}).code == 2);
  CHECK(run({"holes", "-"}, "2 2\n1 0\n0\n").code == 2);
  CHECK(run({"holes", "-"}, "1 2\n1 -1\n").code == 2);
  CHECK(run({"holes", "-"}, "2 2\n1 0\n0 0\n").code == 2);
  CHECK(run({"gen", "cdem", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
