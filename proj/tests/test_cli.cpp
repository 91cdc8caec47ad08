#include <doctest.h>
#include <json.hpp>

#include <string>

#include "tqftkit/error.hpp"
#include "tqftkit/jobs.hpp"
#include "tqftkit/toml_lite.hpp"

using namespace tqftkit;
using Json = nlohmann::json;

namespace {

Json run_text(const std::string& text, JobOptions opts = {}) {
  return Json::parse(run_job(parse_job(text), opts));
}

}  // namespace

TEST_SUITE("toml") {
  TEST_CASE("values, tables and comments parse") {
    TomlDoc d = parse_toml(
        "# job\n"
        "command = \"gauss\"  # trailing\n"
        "n = 42\n"
        "flag = true\n"
        "name = \"a \\\"b\\\"\"\n"
        "[metric]\n"
        "factors = [2, 4]\n"
        "q_diag = [\"1/4\",\n"
        "          \"1/8\"]\n");
    CHECK(d.find("command")->str == "gauss");
    CHECK(d.find("n")->integer == 42);
    CHECK(d.find("flag")->boolean == true);
    CHECK(d.find("name")->str == "a \"b\"");
    REQUIRE(d.has("metric.factors"));
    CHECK(d.find("metric.factors")->array.size() == 2);
    CHECK(d.find("metric.factors")->array[1].integer == 4);
    CHECK(d.find("metric.q_diag")->array[1].str == "1/8");
    CHECK(!d.has("missing"));
  }

  TEST_CASE("nested arrays keep their shape and lines") {
    TomlDoc d = parse_toml(
        "command = \"rt3\"\n"
        "linking = [[0, 1],\n"
        "           [1, 0]]\n");
    const TomlValue& l = *d.find("linking");
    REQUIRE(l.array.size() == 2);
    CHECK(l.array[0].array[1].integer == 1);
    CHECK(l.line == 2);
    CHECK(l.array[1].line == 3);
  }

  TEST_CASE("malformed documents are rejected with line numbers") {
    CHECK_THROWS_WITH_AS(parse_toml("a = 1\nb = \n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_toml("a = 1\na = 2\n"), doctest::Contains("duplicate"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_toml("a = \"unterminated\n"),
                         doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_toml("a = 1.5\n"), doctest::Contains("float"), Error);
    CHECK_THROWS_WITH_AS(parse_toml("a = 1 junk\n"), doctest::Contains("ParseError"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_toml("a = [1, 2\n\n"), doctest::Contains("ParseError"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_toml("a = 99999999999999999999\n"),
                         doctest::Contains("range"), Error);
  }
}

TEST_SUITE("jobs") {
  TEST_CASE("schema validation accepts the documented shapes") {
    JobSpec job = parse_job(
        "command = \"milgram\"\n"
        "factors = [2]\n"
        "q_diag = [\"1/4\"]\n");
    CHECK(job.command == "milgram");
    CHECK(job.input_hash.size() == 16);

    // same payload under a [metric] table
    CHECK(parse_job("command = \"gauss\"\n[metric]\nfactors = [2, 2]\n").command ==
          "gauss");
  }

  TEST_CASE("schema violations carry SchemaError") {
    CHECK_THROWS_WITH_AS(parse_job("command = \"no-such\"\n"),
                         doctest::Contains("unknown command"), Error);
    CHECK_THROWS_WITH_AS(parse_job("factors = [2]\n"), doctest::Contains("command"),
                         Error);
    CHECK_THROWS_WITH_AS(
        parse_job("command = \"gauss\"\nfactors = [2]\nbogus = 1\n"),
        doctest::Contains("unknown key"), Error);
    CHECK_THROWS_WITH_AS(
        parse_job("command = \"gauss\"\nfactors = [2]\nq_diag = [\"2/4\"]\n"),
        doctest::Contains("non-reduced"), Error);
    CHECK_THROWS_WITH_AS(
        parse_job("command = \"gauss\"\nfactors = [2]\nq_diag = [\"5/4\"]\n"),
        doctest::Contains("[0,1)"), Error);
    CHECK_THROWS_WITH_AS(parse_job("command = \"gauss\"\nfactors = []\n"),
                         doctest::Contains("empty"), Error);
    CHECK_THROWS_WITH_AS(
        parse_job("command = \"gauss\"\nfactors = [2]\nq_diag = [\"1/4\", \"0\"]\n"),
        doctest::Contains("one phase per factor"), Error);
    CHECK_THROWS_WITH_AS(
        parse_job("command = \"gauss\"\nlattice = \"A1\"\nfactors = [2]\n"),
        doctest::Contains("not both"), Error);
    CHECK_THROWS_WITH_AS(parse_job("command = \"gauss\"\nlattice = \"Z9\"\n"),
                         doctest::Contains("unknown lattice"), Error);

    // non-symmetric linking is a schema failure, before any computation
    CHECK_THROWS_WITH_AS(parse_job("command = \"rt3\"\n"
                                   "factors = [2]\n"
                                   "q_diag = [\"1/4\"]\n"
                                   "linking = [[0, 1], [2, 0]]\n"),
                         doctest::Contains("SchemaError"), Error);

    CHECK_THROWS_WITH_AS(parse_job("command = \"dw3\"\n"
                                   "group = \"S3\"\n"
                                   "generators = 1\n"
                                   "relators = [\"ab\"]\n"),
                         doctest::Contains("past the declared count"), Error);
    CHECK_THROWS_WITH_AS(parse_job("command = \"dw3\"\n"
                                   "group = \"S3\"\n"
                                   "generators = 1\n"
                                   "relators = [\"a^\"]\n"),
                         doctest::Contains("exponent"), Error);
    CHECK_THROWS_WITH_AS(parse_job("command = \"dw-surface\"\ngroup = \"F4\"\ngenus = 1\n"),
                         doctest::Contains("unknown group"), Error);
    CHECK_THROWS_WITH_AS(
        parse_job("command = \"verlinde\"\nfactors = [2]\ngenus = -1\n"),
        doctest::Contains("genus"), Error);
    CHECK_THROWS_WITH_AS(
        parse_job("command = \"anomaly4\"\nname = \"S5\"\nlattice = \"A1\"\n"),
        doctest::Contains("unknown manifold"), Error);
    CHECK_THROWS_WITH_AS(parse_job("command = \"anomaly4\"\n"
                                   "lattice = \"A1\"\n"
                                   "[fourmanifold]\n"
                                   "b1 = 0\n"
                                   "intersection = [[0, 1], [1, 0], [0, 0]]\n"),
                         doctest::Contains("square"), Error);
  }

  TEST_CASE("milgram job reproduces the semion signature") {
    Json out = run_text(
        "command = \"milgram\"\n"
        "factors = [2]\n"
        "q_diag = [\"1/4\"]\n");
    CHECK(out["result"]["signature"] == 1);
    CHECK(out["result"]["order"] == 2);
    CHECK(out["command"] == "milgram");
    CHECK(out["version"] == std::string(kVersion));
  }

  TEST_CASE("anomaly4 on the four-sphere counts flat fields") {
    Json out = run_text(
        "command = \"anomaly4\"\n"
        "name = \"S4\"\n"
        "lattice = \"A1\"\n");
    CHECK(out["result"]["exact"]["rational"] == "2");
    CHECK(out["result"]["manifold"]["euler"] == 2);
    CHECK(out["result"]["closed"]["form"] == "2");
  }

  TEST_CASE("dim1 with the trivial character gives 1") {
    Json out = run_text(
        "command = \"dim1\"\n"
        "group = \"Z/4\"\n"
        "lambda = [\"0\", \"0\", \"0\", \"0\"]\n");
    CHECK(out["result"]["value"] == "1");
  }

  TEST_CASE("gauss and verlinde report exact values") {
    Json g = run_text(
        "command = \"gauss\"\n"
        "factors = [2]\n"
        "q_diag = [\"1/4\"]\n");
    CHECK(g["result"]["eighth_root"] == "1*sqrt(2)*z8^1");
    Json v = run_text(
        "command = \"verlinde\"\n"
        "factors = [2, 2]\n"
        "b = [[\"1/2\"], []]\n"
        "genus = 3\n");
    CHECK(v["result"]["dimension"] == "64");
  }

  TEST_CASE("groupoid-card and sum1 agree with the direct sums") {
    Json c = run_text("command = \"groupoid-card\"\ncomponents = [[2, 4], [1, 3]]\n");
    CHECK(c["result"]["value"] == "5");
    Json s = run_text(
        "command = \"sum1\"\n"
        "group = \"Z/3\"\n"
        "lambda = [\"0\", \"1/3\", \"2/3\"]\n");
    CHECK(s["result"]["push"]["rational"] == "0");
    CHECK(s["result"]["direct"] == "0");
    Json t = run_text(
        "command = \"sum1\"\n"
        "group = \"Z/3\"\n"
        "lambda = [\"0\", \"0\", \"0\"]\n");
    CHECK(t["result"]["direct"] == "1");
  }

  TEST_CASE("domain failures surface as domain errors, not schema errors") {
    // degenerate form: schema-clean, fails in the computation
    CHECK_THROWS_WITH_AS(run_text("command = \"milgram\"\n"
                                  "factors = [4]\n"
                                  "q_diag = [\"1/2\"]\n"),
                         doctest::Contains("DegenerateForm"), Error);
    // non-character: length is schema-checkable only at run time here
    CHECK_THROWS_WITH_AS(run_text("command = \"dim1\"\n"
                                  "group = \"Z/4\"\n"
                                  "lambda = [\"0\", \"1/3\", \"0\", \"0\"]\n"),
                         doctest::Contains("NotACharacter"), Error);
    // non-unimodular intersection form passes the schema, fails validation
    CHECK_THROWS_WITH_AS(run_text("command = \"anomaly4\"\n"
                                  "lattice = \"A1\"\n"
                                  "[fourmanifold]\n"
                                  "b1 = 0\n"
                                  "intersection = [[2]]\n"),
                         doctest::Contains("InvalidManifold"), Error);
  }

  TEST_CASE("output is deterministic and independent of scheduling") {
    std::string text =
        "command = \"rt3\"\n"
        "factors = [3]\n"
        "q_diag = [\"1/3\"]\n"
        "linking = [[2, 1], [1, 2]]\n";
    JobSpec job = parse_job(text);
    std::string a = run_job(job);
    std::string b = run_job(job);
    CHECK(a == b);
    JobOptions serial;
    serial.parallel = false;
    CHECK(run_job(job, serial) == a);
    JobOptions compact;
    compact.json_indent = -1;
    std::string c = run_job(job, compact);
    CHECK(c.find('\n') == std::string::npos);
    CHECK(Json::parse(c) == Json::parse(a));
  }

  TEST_CASE("verify mode re-runs the cross-checks") {
    JobOptions verify;
    verify.verify = true;
    Json out = run_text(
        "command = \"mtc\"\n"
        "factors = [4]\n"
        "q_diag = [\"1/8\"]\n",
        verify);
    bool unitary = false;
    for (const auto& c : out["checks"])
      if (c["name"] == "S is unitary" && c["status"] == "pass") unitary = true;
    CHECK(unitary);

    Json rt = run_text(
        "command = \"rt3\"\n"
        "factors = [2]\n"
        "q_diag = [\"1/4\"]\n"
        "linking = [[1]]\n",
        verify);
    CHECK(rt["checks"].size() == 3);
  }

  TEST_CASE("input hash tracks the exact job text") {
    JobSpec a = parse_job("command = \"dim1\"\ngroup = \"Z/2\"\nlambda = [\"0\", \"0\"]\n");
    JobSpec b = parse_job("command = \"dim1\"\ngroup = \"Z/2\"\nlambda = [\"0\",\"0\"]\n");
    CHECK(a.input_hash != b.input_hash);
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  }
}
