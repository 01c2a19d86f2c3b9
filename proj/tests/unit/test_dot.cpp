#include "autosg/dot.hpp"

#include <regex>

#include "autosg/constructions.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace autosg;

namespace {
  std::size_t count_matches(std::string const& text, std::regex const& re) {
    return static_cast<std::size_t>(std::distance(
        std::sregex_iterator(text.begin(), text.end(), re),
        std::sregex_iterator()));
  }

  std::size_t nodes(std::string const& dot) {
    return count_matches(dot, std::regex(R"(^  "[^"]*";$)", std::regex::multiline));
  }

  std::size_t edges(std::string const& dot) {
    return count_matches(dot, std::regex(" -> "));
  }
}  // namespace

TEST_CASE("dot export lists each state and transition once") {
  auto const identity = export_dot(support::load("identity.aut"));
  CHECK(identity.starts_with("digraph automaton {\n"));
  CHECK(identity.ends_with("}\n"));
  CHECK(nodes(identity) == 1);
  CHECK(edges(identity) == 3);

  auto const adding = export_dot(support::load("adding.aut"));
  CHECK(nodes(adding) == 2);
  CHECK(edges(adding) == 4);
  CHECK(adding.find(R"("σ" -> "e" [label="0|1"];)") != std::string::npos);

  auto const triv = support::load("triv.aut");
  auto const fp   = export_dot(free_product(triv, 0, triv, 0).automaton);
  CHECK(nodes(fp) == 2);
  CHECK(edges(fp) == 16);
}

TEST_CASE("dot export escapes quotes") {
  auto const aut = Automaton({"a\"b"}, {"x"}, {{0, 0}});
  CHECK(export_dot(aut).find(R"("a\"b")") != std::string::npos);
}
