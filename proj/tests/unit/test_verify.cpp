#include "autosg/verify.hpp"

#include "autosg/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace autosg;

namespace {
  ConstructionOutput adding_swap() {
    return free_product(support::load("adding.aut"), 1,
                        support::load("c2swap.aut"), 1);
  }

  // A copy of `out` with one transition replaced.
  ConstructionOutput tampered(ConstructionOutput out, std::string const& q,
                              std::string const& x, std::string const& to,
                              std::string const& y) {
    auto d = out.automaton.to_draft();
    for (auto& t : d.transitions) {
      if (t.from == q && t.input == x) {
        t.to     = to;
        t.output = y;
      }
    }
    out.automaton = Automaton::from_draft(d);
    return out;
  }
}  // namespace

TEST_CASE("suites pass on correct constructions") {
  auto const fp = adding_swap();
  auto const& a = fp.automaton;
  CHECK(verify_left_identity(fp, a.state("e")).passed());
  CHECK(verify_left_identity(fp, a.state("1")).passed());
  CHECK(!verify_left_identity(a, a.state("e")).passed());
  CHECK(verify_marked_absorption(fp).passed());
  CHECK(verify_factor_embedding(fp, 3).passed());
  CHECK(verify_xw_yw(fp, 2).passed());
  auto const adding = support::load("adding.aut");
  auto const c2     = support::load_monoid("c2.mon");
  CHECK(verify_wreath_oracle(adding, c2, 3).passed());
  CHECK(verify_initial_symbol_oracle(adding, c2, 3).passed());
  CHECK(verify_tree_endomorphism(a, 3).passed());
}

TEST_CASE("suites detect broken automata") {
  auto const fp = adding_swap();
  auto const& a = fp.automaton;
  CHECK(!verify_left_identity(a, a.state("σ")).passed());
  CHECK(!verify_marked_absorption(tampered(fp, "σ", "a°", "σ", "b°")).passed());
  CHECK(!verify_factor_embedding(tampered(fp, "σ", "1", "e", "1"), Factor::left,
                                 support::load("adding.aut"), 3)
             .passed());
  CHECK(!verify_xw_yw(tampered(fp, "σ", "#", "σ", "#"), 2).passed());
}

TEST_CASE("report text") {
  auto const fp     = adding_swap();
  auto const report = verify_marked_absorption(fp);
  auto const text   = report.to_text();
  CHECK(text.starts_with("PASS  "));
  CHECK(text.find("FAIL") == std::string::npos);
  auto const n = std::to_string(report.checks.size());
  CHECK(text.find(n + "/" + n + " checks passed") != std::string::npos);

  auto const bad = verify_left_identity(fp.automaton, 0);
  CHECK(bad.to_text().find("FAIL  ") != std::string::npos);
}

TEST_CASE("run_suite dispatches by name") {
  CHECK(suite_names().size() == 6);
  SuiteInputs in;
  in.automaton = adding_swap();
  in.state     = "e";
  in.max_len   = 3;
  in.max_k     = 2;
  for (auto name : {"left-identity", "marked-absorption", "factor-embedding",
                    "xw-yw"}) {
    auto const r = run_suite(name, in);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.suite == name);
  }
  CHECK_THROWS_AS(run_suite("wreath-oracle", in), UsageError);
  in.base   = support::load("adding.aut");
  in.monoid = support::load_monoid("c2.mon");
  CHECK(run_suite("wreath-oracle", in).passed());
  CHECK(run_suite("initial-symbol-oracle", in).passed());
  CHECK_THROWS_AS(run_suite("no-such-suite", in), UsageError);
  in.state.reset();
  CHECK_THROWS_AS(run_suite("left-identity", in), UsageError);
}
