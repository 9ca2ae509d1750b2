#include <doctest.h>

#include <set>

#include "spanfact/config.hpp"
#include "spanfact/errors.hpp"
#include "spanfact/fixtures.hpp"
#include "spanfact/pipeline.hpp"
#include "spanfact/report.hpp"

using namespace spanfact;

TEST_CASE("presentation config") {
  auto cfg = parse_config_text(R"json({
    "name": "a5",
    "group_generators": ["(0 1 2 3 4)", "(0 1 2)"],
    "H_generators": ["(0 2)(1 3)"],
    "S": ["(0 1 2 3 4)", "[3,2,1,4,0]"],
    "analysis": {"blocks": true},
    "budgets": {"max_nodes": 500},
    "format": "json-lines"
  })json");
  REQUIRE(cfg.presentation);
  CHECK(cfg.presentation->degree == 5);
  CHECK(cfg.presentation->group_generators.size() == 2);
  CHECK(cfg.analysis.blocks);
  CHECK(cfg.budgets.max_nodes == 500);
  CHECK(cfg.format == OutputFormat::JsonLines);
  CHECK(parse_config(to_json(cfg)).presentation->s == cfg.presentation->s);
}

TEST_CASE("toy config") {
  auto cfg = parse_config_text(R"json({"toy": {"m": 4}})json");
  CHECK(cfg.toy_m == 4u);
  CHECK(cfg.name == "toy:4");
}

TEST_CASE("config errors cite field and token") {
  auto expect = [](const char *text, const std::string &field, const std::string &token) {
    try {
      parse_config_text(text);
      FAIL("no error for " << text);
    } catch (const ParseError &e) {
      CHECK(e.field() == field);
      CHECK(e.token() == token);
    }
  };
  expect("{}", "", "{}");
  expect(R"json({"group_generators": ["(0 1"], "S": ["(0 1)"]})json", "group_generators[0]", "(0 1");
  expect(R"json({"group_generators": ["(0 1)"], "S": ["(0 x)"]})json", "S[0]", "x)");
  expect(R"json({"group_generators": ["(0 1)"], "S": [3]})json", "S[0]", "3");
  expect(R"json({"toy": {"m": 2}})json", "toy.m", "2");
  expect(R"json({"toy": {"m": 3}, "S": ["(0 1)"]})json", "toy", "");
  expect(R"json({"toy": {"m": 3}, "colour": 1})json", "colour", "colour");
  expect(R"json({"toy": {"m": 3}, "format": "xml"})json", "format", "xml");
  expect(R"json({"toy": {"m": 3}, "budgets": {"max_nodes": -1}})json", "max_nodes", "-1");
  CHECK_THROWS_AS(parse_config_text("{"), ParseError);
  CHECK_THROWS_AS(fixture_config("toy:x"), ParseError);
  CHECK_THROWS_AS(fixture_config("nope"), ParseError);
}

TEST_CASE("tsv output") {
  ReportTable t{"demo", {"a", "b"}, {}};
  CHECK(emit_table(t, OutputFormat::Tsv) == "a\tb\n");
  t.add({1, "x y"});
  t.add({nlohmann::json::array({1, 2}), true});
  CHECK(emit_table(t, OutputFormat::Tsv) == "a\tb\n1\tx y\n[1,2]\ttrue\n");
  CHECK_THROWS_AS(t.add({1}), PreconditionError);
}

TEST_CASE("json lines round trip") {
  ReportTable t{"demo", {"bitmask", "type", "words", "flag"}, {}};
  t.add({3, "(3,12,15)", nlohmann::json::array({"e", "1", "12'"}), false});
  t.add({4, "(30)", nlohmann::json::array(), nullptr});
  auto text = emit_table(t, OutputFormat::JsonLines);
  CHECK(text.find("\"schema\":\"demo\"") != std::string::npos);
  CHECK(text.find("\"version\":\"" + std::string(tool_version()) + "\"") != std::string::npos);
  auto back = parse_json_lines(text);
  CHECK(back == t);
  CHECK(emit_table(back, OutputFormat::JsonLines) == text);
}

TEST_CASE("pipeline on toy:3") {
  auto cfg = fixture_config("toy:3");
  cfg.analysis.blocks = true;
  auto res = run_pipeline(cfg);
  auto find = [&](const std::string &schema) -> const ReportTable & {
    for (const auto &t : res.tables)
      if (t.schema == schema)
        return t;
    FAIL("missing table " << schema);
    throw;
  };
  CHECK(find("factorization").rows.size() == 8);
  const auto &systems = find("block_system");
  bool saw_cycles = false;
  for (const auto &row : systems.rows) {
    if (row[0] == "x-cycles") {
      saw_cycles = true;
      CHECK(row[5] == "()");
      CHECK(row[6] == false);
    }
  }
  CHECK(saw_cycles);
}

TEST_CASE("pipeline output is deterministic") {
  auto cfg = fixture_config("a5-ex3");
  cfg.analysis.tree_search = true;
  auto text = [&] {
    std::string out;
    for (const auto &t : run_pipeline(cfg).tables)
      out += emit_table(t, OutputFormat::JsonLines);
    return out;
  };
  CHECK(text() == text());
}

TEST_CASE("Example 3 enumeration through the pipeline") {
  auto s = open_session(fixture_config("a5-ex3"));
  auto dist = distribution_report(s);
  REQUIRE(dist.rows.size() == 4);
  std::multiset<std::size_t> sizes;
  for (const auto &row : dist.rows)
    sizes.insert(row[3].get<std::size_t>());
  CHECK(sizes == std::multiset<std::size_t>{12, 12, 20, 20});
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ParseError("f", "t", "bad")) == kExitConfig);
  CHECK(exit_code_for(UniformityError("u")) == kExitPrecondition);
  CHECK(exit_code_for(CapExceededError("c")) == kExitBudget);
  CHECK(exit_code_for(std::runtime_error("x")) == kExitInternal);
}

TEST_CASE("parallel map keeps index order") {
  auto out = parallel_map(100, [](std::size_t i) { return i * i; }, 4);
  for (std::size_t i = 0; i < out.size(); ++i)
    CHECK(out[i] == i * i);
  CHECK_THROWS_AS(parallel_map(
                      10,
                      [](std::size_t i) -> int {
                        if (i == 7)
                          throw PreconditionError("seven");
                        return 0;
                      },
                      3),
                  PreconditionError);
}
