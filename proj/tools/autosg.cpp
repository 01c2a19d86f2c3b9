// Command-line front end over the C interface of libautosg.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "autosg/autosg.h"

namespace {

  constexpr int exit_ok     = 0;
  constexpr int exit_domain = 1;
  constexpr int exit_usage  = 2;

  // Failure carrying the process exit status.
  struct Failure {
    int         code;
    std::string message;
  };

  int exit_code_for(autosg_status status) {
    switch (status) {
      case AUTOSG_OK:
        return exit_ok;
      case AUTOSG_ERR_PRECONDITION:
      case AUTOSG_ERR_CAPACITY:
      case AUTOSG_ERR_INTERNAL:
        return exit_domain;
      default:
        return exit_usage;
    }
  }

  void check(autosg_status status) {
    if (status != AUTOSG_OK) {
      throw Failure{exit_code_for(status),
                    std::string(autosg_status_name(status)) + ": "
                        + autosg_last_error()};
    }
  }

  struct StringDeleter {
    void operator()(char* s) const {
      autosg_string_free(s);
    }
  };
  using owned_string = std::unique_ptr<char, StringDeleter>;

  template <typename T, void (*Free)(T*)>
  struct HandleDeleter {
    void operator()(T* p) const {
      Free(p);
    }
  };
  using automaton_ptr
      = std::unique_ptr<autosg_automaton,
                        HandleDeleter<autosg_automaton, autosg_automaton_free>>;
  using monoid_ptr
      = std::unique_ptr<autosg_monoid,
                        HandleDeleter<autosg_monoid, autosg_monoid_free>>;
  using enumeration_ptr = std::unique_ptr<
      autosg_enumeration,
      HandleDeleter<autosg_enumeration, autosg_enumeration_free>>;

  automaton_ptr load_automaton(std::string const& path) {
    autosg_automaton* a = nullptr;
    check(autosg_automaton_load(path.c_str(), &a));
    return automaton_ptr(a);
  }

  monoid_ptr load_monoid(std::string const& path) {
    autosg_monoid* m = nullptr;
    check(autosg_monoid_load(path.c_str(), &m));
    return monoid_ptr(m);
  }

  // Takes ownership of a string returned by the library.
  std::string take(char* s) {
    owned_string holder(s);
    return s == nullptr ? std::string() : std::string(s);
  }

  void emit(std::string const& text, std::string const& out_path) {
    if (out_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(out_path, std::ios::binary);
    file << text;
    file.close();
    if (!file) {
      throw Failure{exit_usage, "cannot write \"" + out_path + "\""};
    }
  }

  std::string serialize(autosg_automaton const* a) {
    char* text = nullptr;
    check(autosg_automaton_serialize(a, &text));
    return take(text);
  }

  struct Limits {
    std::size_t                max_depth = 20;
    std::optional<std::size_t> max_elements;

    // --max-elements wins over AUTOSG_MAX_ELEMENTS; 0 means the default.
    std::size_t element_cap() const {
      if (max_elements) {
        return *max_elements;
      }
      if (char const* env = std::getenv("AUTOSG_MAX_ELEMENTS")) {
        try {
          return std::stoull(env);
        } catch (std::exception const&) {
          throw Failure{exit_usage,
                        "AUTOSG_MAX_ELEMENTS must be a nonnegative integer"};
        }
      }
      return 0;
    }
  };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automaton semigroups: actions, equality, enumeration, "
               "free and wreath product constructions"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every verb");

  Limits limits;
  app.add_option("--max-depth",
                 limits.max_depth,
                 "Largest level depth for level tables")
      ->capture_default_str();
  app.add_option("--max-elements",
                 limits.max_elements,
                 "Cap on enumerated elements and constructed states "
                 "(0 = library default)");

  std::string automaton_path, out_path, word, input, left, right;
  std::string initial_symbols, rest_symbols, state, base_path, monoid_path;
  std::string left_id, right_id;
  std::size_t max_len = 0, max_k = 0, level = 0, power = 0;
  bool        restricted = false, printed_table = false, show_elements = false;

  auto* validate = app.add_subcommand("validate", "Check an automaton file");
  validate->add_option("--automaton,automaton", automaton_path, "Automaton file")
      ->required();

  auto* act = app.add_subcommand("act", "Apply a word to a string");
  act->add_option("--automaton", automaton_path, "Automaton file")->required();
  act->add_option("--word", word, "Comma-separated states")->required();
  auto* act_input = act->add_option("--input", input, "Input symbols");
  auto* act_level = act->add_option(
      "--level", level, "Print the action on every string of this length");
  act_input->excludes(act_level);

  auto* equal = app.add_subcommand("equal", "Decide equality of two words");
  equal->add_option("--automaton", automaton_path, "Automaton file")
      ->required();
  equal->add_option("--left", left, "First word")->required();
  equal->add_option("--right", right, "Second word")->required();
  auto* eq_init = equal->add_option(
      "--initial-symbols", initial_symbols, "Symbols allowed first");
  auto* eq_rest = equal->add_option(
      "--rest-symbols", rest_symbols, "Symbols allowed afterwards");
  auto* eq_restricted = equal->add_flag(
      "--restricted",
      restricted,
      "Use the symbol partition recorded in the automaton file");
  eq_init->needs(eq_rest);
  eq_rest->needs(eq_init);
  eq_restricted->excludes(eq_init);

  auto* enumerate
      = app.add_subcommand("enumerate", "List distinct elements by word length");
  enumerate->add_option("--automaton", automaton_path, "Automaton file")
      ->required();
  enumerate->add_option("--max-len", max_len, "Longest word")->required();
  enumerate->add_flag(
      "--show-elements", show_elements, "Print each minimized element");

  auto* growth = app.add_subcommand("growth", "Element counts by word length");
  growth->add_option("--automaton", automaton_path, "Automaton file")
      ->required();
  growth->add_option("--max-len", max_len, "Longest word")->required();

  auto* construct = app.add_subcommand("construct", "Build an automaton");
  construct->require_subcommand(1, 1);
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output file (default stdout)");
  };

  auto* c_fp = construct->add_subcommand(
      "free-product", "Free product of two semigroups with left identities");
  c_fp->add_option("--left", left, "First factor automaton")->required();
  c_fp->add_option("--left-id", left_id, "Left identity of the first factor")
      ->required();
  c_fp->add_option("--right", right, "Second factor automaton")->required();
  c_fp->add_option("--right-id", right_id, "Left identity of the second factor")
      ->required();
  add_out(c_fp);

  auto* c_fpi = construct->add_subcommand(
      "free-product-identity", "Free product with an identity adjoined");
  c_fpi->add_option("--left", left, "First factor automaton")->required();
  c_fpi->add_option("--right", right, "Second factor automaton")->required();
  c_fpi->add_flag("--printed-table",
                  printed_table,
                  "Use t,$ -> t,#° for the second factor states");
  add_out(c_fpi);

  auto* c_dp = construct->add_subcommand("direct-power", "Direct power A^n");
  c_dp->add_option("--automaton", automaton_path, "Automaton file")->required();
  c_dp->add_option("--n", power, "Exponent")->required();
  add_out(c_dp);

  auto* c_wr = construct->add_subcommand(
      "wreath", "Automaton generating a copy of S wr T");
  c_wr->add_option("--s-automaton", base_path, "Automaton for S")->required();
  c_wr->add_option("--monoid", monoid_path, "Monoid T")->required();
  add_out(c_wr);

  auto* c_wri = construct->add_subcommand(
      "wreath-initial", "Initial-symbol automaton for S wr T");
  c_wri->add_option("--s-automaton", base_path, "Automaton for S")->required();
  c_wri->add_option("--monoid", monoid_path, "Monoid T")->required();
  add_out(c_wri);

  auto* c_ai = construct->add_subcommand(
      "adjoin-identity", "Add a fresh identity state");
  c_ai->add_option("--automaton", automaton_path, "Automaton file")->required();
  add_out(c_ai);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  std::string suite;
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--automaton", automaton_path, "Constructed automaton");
  verify->add_option("--state", state, "State name");
  verify->add_option("--s-automaton", base_path, "Automaton for S");
  verify->add_option("--monoid", monoid_path, "Monoid T");
  verify->add_option("--max-len", max_len, "Longest word (default 4)");
  verify->add_option("--max-k", max_k, "Largest k for x_w, y_w (default 3)");

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  dot->add_option("--automaton", automaton_path, "Automaton file")->required();
  add_out(dot);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*validate) {
      std::ifstream file(automaton_path, std::ios::binary);
      if (!file) {
        throw Failure{exit_usage, "cannot read \"" + automaton_path + "\""};
      }
      std::ostringstream text;
      text << file.rdbuf();
      int   valid  = 0;
      char* report = nullptr;
      check(autosg_validate_text(text.str().c_str(), &valid, &report));
      std::string const lines = take(report);
      if (valid) {
        std::cout << "valid\n";
        return exit_ok;
      }
      std::istringstream in(lines);
      for (std::string line; std::getline(in, line);) {
        std::cout << automaton_path << ": " << line << '\n';
      }
      return exit_domain;
    }

    if (*act) {
      auto a = load_automaton(automaton_path);
      char* out = nullptr;
      if (act_level->count() > 0) {
        if (level > limits.max_depth) {
          throw Failure{exit_domain,
                        "level " + std::to_string(level)
                            + " exceeds --max-depth "
                            + std::to_string(limits.max_depth)};
        }
        check(autosg_act_on_level(a.get(), word.c_str(), level, 0, &out));
        std::cout << take(out);
      } else {
        if (act_input->count() == 0) {
          throw Failure{exit_usage, "act needs --input or --level"};
        }
        check(autosg_act(a.get(), word.c_str(), input.c_str(), &out));
        std::cout << take(out) << '\n';
      }
      return exit_ok;
    }

    if (*equal) {
      auto a      = load_automaton(automaton_path);
      int  result = 0;
      if (restricted) {
        char* c = nullptr;
        char* d = nullptr;
        check(autosg_automaton_symbol_partition(a.get(), &c, &d));
        initial_symbols = take(c);
        rest_symbols    = take(d);
      }
      if (restricted || eq_init->count() > 0) {
        check(autosg_restricted_equal(a.get(),
                                      left.c_str(),
                                      right.c_str(),
                                      initial_symbols.c_str(),
                                      rest_symbols.c_str(),
                                      &result));
      } else {
        check(autosg_equal(a.get(), left.c_str(), right.c_str(), &result));
      }
      std::cout << (result ? "equal" : "not equal") << '\n';
      return exit_ok;
    }

    if (*enumerate) {
      auto                a = load_automaton(automaton_path);
      autosg_enumeration* raw = nullptr;
      check(autosg_enumerate(a.get(), max_len, limits.element_cap(), &raw));
      enumeration_ptr e(raw);
      std::size_t const n = autosg_enumeration_size(e.get());
      for (std::size_t i = 0; i < n; ++i) {
        char*       w      = nullptr;
        std::size_t states = 0;
        check(autosg_enumeration_word(e.get(), i, &w));
        check(autosg_enumeration_element_states(e.get(), i, &states));
        std::cout << take(w) << "  (" << states
                  << (states == 1 ? " state" : " states") << ")\n";
        if (show_elements) {
          char* text = nullptr;
          check(autosg_enumeration_element_text(e.get(), i, &text));
          std::cout << take(text) << '\n';
        }
      }
      std::cout << n << (n == 1 ? " element" : " elements") << '\n';
      return exit_ok;
    }

    if (*growth) {
      auto                     a = load_automaton(automaton_path);
      std::vector<std::size_t> counts(max_len);
      check(autosg_growth(a.get(), max_len, limits.element_cap(), counts.data()));
      for (std::size_t i = 0; i < counts.size(); ++i) {
        std::cout << i + 1 << ' ' << counts[i] << '\n';
      }
      return exit_ok;
    }

    if (*construct) {
      autosg_automaton* raw = nullptr;
      std::size_t const cap = limits.max_elements.value_or(0);
      if (*c_fp) {
        auto l = load_automaton(left);
        auto r = load_automaton(right);
        check(autosg_construct_free_product(
            l.get(), left_id.c_str(), r.get(), right_id.c_str(), &raw));
      } else if (*c_fpi) {
        auto l = load_automaton(left);
        auto r = load_automaton(right);
        check(autosg_construct_free_product_identity(
            l.get(), r.get(), printed_table ? 1 : 0, &raw));
      } else if (*c_dp) {
        auto a = load_automaton(automaton_path);
        check(autosg_construct_direct_power(a.get(), power, cap, &raw));
      } else if (*c_wr || *c_wri) {
        auto s = load_automaton(base_path);
        auto m = load_monoid(monoid_path);
        check(*c_wr ? autosg_construct_wreath(s.get(), m.get(), cap, &raw)
                    : autosg_construct_wreath_initial(
                        s.get(), m.get(), cap, &raw));
      } else {
        auto a = load_automaton(automaton_path);
        check(autosg_construct_adjoin_identity(a.get(), &raw));
      }
      automaton_ptr result(raw);
      emit(serialize(result.get()), out_path);
      return exit_ok;
    }

    if (*verify) {
      automaton_ptr a, s;
      monoid_ptr    m;
      if (!automaton_path.empty()) {
        a = load_automaton(automaton_path);
      }
      if (!base_path.empty()) {
        s = load_automaton(base_path);
      }
      if (!monoid_path.empty()) {
        m = load_monoid(monoid_path);
      }
      autosg_verify_args args{a.get(),
                              state.empty() ? nullptr : state.c_str(),
                              s.get(),
                              m.get(),
                              max_len,
                              max_k};
      char* report = nullptr;
      int   passed = 0;
      check(autosg_verify(suite.c_str(), &args, &report, &passed));
      std::cout << take(report);
      return passed ? exit_ok : exit_domain;
    }

    if (*dot) {
      auto  a   = load_automaton(automaton_path);
      char* out = nullptr;
      check(autosg_export_dot(a.get(), &out));
      emit(take(out), out_path);
      return exit_ok;
    }
  } catch (Failure const& f) {
    std::cerr << "autosg: " << f.message << '\n';
    return f.code;
  }
  return exit_usage;
}
