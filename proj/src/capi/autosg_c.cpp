#include "autosg/autosg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "autosg/dot.hpp"
#include "autosg/error.hpp"
#include "autosg/names.hpp"
#include "autosg/text_format.hpp"
#include "autosg/verify.hpp"

struct autosg_automaton {
  autosg::AutomatonDocument doc;
};

struct autosg_monoid {
  autosg::FiniteMonoid monoid;
};

struct autosg_enumeration {
  std::shared_ptr<autosg::Automaton const>  aut;
  std::vector<autosg::EnumeratedElement>    elements;
};

namespace {
  thread_local std::string last_error;

  autosg_status fail(autosg_status status, std::string message) {
    last_error = std::move(message);
    return status;
  }

  // Runs `body`, translating exceptions into status codes.
  template <typename F>
  autosg_status guarded(F&& body) noexcept {
    try {
      last_error.clear();
      body();
      return AUTOSG_OK;
    } catch (autosg::UsageError const& e) {
      return fail(AUTOSG_ERR_USAGE, e.what());
    } catch (autosg::ParseError const& e) {
      return fail(AUTOSG_ERR_PARSE, e.what());
    } catch (autosg::PreconditionError const& e) {
      return fail(AUTOSG_ERR_PRECONDITION, e.what());
    } catch (autosg::CapacityError const& e) {
      return fail(AUTOSG_ERR_CAPACITY, e.what());
    } catch (autosg::IoError const& e) {
      return fail(AUTOSG_ERR_IO, e.what());
    } catch (std::bad_alloc const&) {
      return fail(AUTOSG_ERR_CAPACITY, "out of memory");
    } catch (std::exception const& e) {
      return fail(AUTOSG_ERR_INTERNAL, e.what());
    } catch (...) {
      return fail(AUTOSG_ERR_INTERNAL, "unknown error");
    }
  }

  void require(void const* p, char const* what) {
    if (p == nullptr) {
      throw autosg::UsageError(std::string(what) + " must not be null");
    }
  }

  char* copy_string(std::string const& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  autosg::Automaton const& automaton_of(autosg_automaton const* a) {
    require(a, "automaton");
    return a->doc.content.automaton;
  }

  autosg::Word parse_word(autosg::Automaton const& aut, char const* text) {
    require(text, "word");
    return autosg::Word::parse(aut, text);
  }

  std::vector<autosg::symbol_index>
  parse_symbol_set(autosg::Automaton const& aut, char const* text) {
    require(text, "symbol set");
    std::vector<autosg::symbol_index> out;
    for (auto const& name : autosg::split_top_level(text)) {
      out.push_back(aut.symbol(name));
    }
    return out;
  }

  autosg_automaton* wrap(autosg::ConstructionOutput out) {
    return new autosg_automaton{{std::move(out), std::nullopt}};
  }

  // A state of `factor` named either directly or by its name inside a
  // free product, where colliding names carry the suffix `suffix`.
  autosg::state_index factor_state(autosg::Automaton const& factor,
                                   char const*              name,
                                   char                     suffix) {
    require(name, "identity state");
    std::string_view const text = name;
    if (auto q = factor.find_state(text)) {
      return *q;
    }
    if (!text.empty() && text.back() == suffix) {
      if (auto q = factor.find_state(text.substr(0, text.size() - 1))) {
        return *q;
      }
    }
    return factor.state(text);  // throws with the usual message
  }

  std::size_t or_default(std::size_t value, std::size_t fallback) {
    return value == 0 ? fallback : value;
  }
}  // namespace

extern "C" {

const char* autosg_last_error(void) {
  return last_error.c_str();
}

const char* autosg_status_name(autosg_status status) {
  switch (status) {
    case AUTOSG_OK:
      return "ok";
    case AUTOSG_ERR_USAGE:
      return "usage error";
    case AUTOSG_ERR_PARSE:
      return "parse error";
    case AUTOSG_ERR_PRECONDITION:
      return "precondition failed";
    case AUTOSG_ERR_CAPACITY:
      return "capacity exceeded";
    case AUTOSG_ERR_IO:
      return "i/o error";
    case AUTOSG_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void autosg_string_free(char* s) {
  std::free(s);
}

autosg_status autosg_automaton_parse(const char* text, autosg_automaton** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new autosg_automaton{autosg::parse_automaton(text)};
  });
}

autosg_status autosg_automaton_load(const char* path, autosg_automaton** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new autosg_automaton{autosg::load_automaton(path)};
  });
}

void autosg_automaton_free(autosg_automaton* a) {
  delete a;
}

autosg_status autosg_automaton_serialize(const autosg_automaton* a,
                                         char**                  out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "out");
    *out = copy_string(autosg::serialize(a->doc));
  });
}

autosg_status autosg_automaton_size(const autosg_automaton* a,
                                    size_t*                 states,
                                    size_t*                 symbols) {
  return guarded([&] {
    auto const& aut = automaton_of(a);
    if (states != nullptr) {
      *states = aut.number_of_states();
    }
    if (symbols != nullptr) {
      *symbols = aut.alphabet_size();
    }
  });
}

autosg_status autosg_validate_text(const char* text, int* valid, char** report) {
  return guarded([&] {
    require(text, "text");
    require(valid, "valid");
    require(report, "report");
    std::string lines;
    try {
      auto const draft = autosg::parse_draft(text);
      for (auto const& d : autosg::validate(draft)) {
        lines += autosg::to_string(d) + "\n";
      }
      if (lines.empty()) {
        autosg::parse_automaton(text);
      }
    } catch (autosg::ParseError const& e) {
      lines += std::string(e.what()) + "\n";
    }
    *valid  = lines.empty() ? 1 : 0;
    *report = copy_string(lines);
  });
}

autosg_status autosg_act(const autosg_automaton* a,
                         const char*             word,
                         const char*             input,
                         char**                  out) {
  return guarded([&] {
    auto const& aut = automaton_of(a);
    require(input, "input");
    require(out, "out");
    auto const w     = parse_word(aut, word);
    auto const image = autosg::act(aut, w, autosg::parse_symbols(aut, input));
    *out = copy_string(autosg::format_symbols(*aut.alphabet(), image));
  });
}

autosg_status autosg_act_on_level(const autosg_automaton* a,
                                  const char*             word,
                                  size_t                  depth,
                                  size_t                  bound,
                                  char**                  out) {
  return guarded([&] {
    auto const& aut = automaton_of(a);
    require(out, "out");
    auto const table = autosg::act_on_level(
        aut,
        parse_word(aut, word),
        depth,
        or_default(bound, autosg::default_level_bound));
    std::string text;
    for (std::size_t i = 0; i < table.size(); ++i) {
      text += autosg::format_symbols(*aut.alphabet(), table.source(i));
      text += " -> ";
      text += autosg::format_symbols(*aut.alphabet(), table.image(i));
      text += '\n';
    }
    *out = copy_string(text);
  });
}

autosg_status autosg_equal(const autosg_automaton* a,
                           const char*             left,
                           const char*             right,
                           int*                    result) {
  return guarded([&] {
    auto const& aut = automaton_of(a);
    require(result, "result");
    *result = autosg::equal(aut, parse_word(aut, left), parse_word(aut, right))
                  ? 1
                  : 0;
  });
}

autosg_status autosg_restricted_equal(const autosg_automaton* a,
                                      const char*             left,
                                      const char*             right,
                                      const char*             initial_symbols,
                                      const char*             rest_symbols,
                                      int*                    result) {
  return guarded([&] {
    auto const& aut = automaton_of(a);
    require(result, "result");
    auto const c = parse_symbol_set(aut, initial_symbols);
    auto const d = parse_symbol_set(aut, rest_symbols);
    *result = autosg::restricted_equal(
                  aut, parse_word(aut, left), parse_word(aut, right), c, d)
                  ? 1
                  : 0;
  });
}

autosg_status autosg_automaton_symbol_partition(const autosg_automaton* a,
                                                char** initial_symbols,
                                                char** rest_symbols) {
  return guarded([&] {
    require(a, "automaton");
    require(initial_symbols, "initial_symbols");
    require(rest_symbols, "rest_symbols");
    auto const& content = a->doc.content;
    if (content.initial_symbols.empty()) {
      throw autosg::UsageError("automaton records no initial-symbol partition");
    }
    *initial_symbols = copy_string(autosg::join(content.initial_symbols, ","));
    try {
      *rest_symbols = copy_string(autosg::join(content.rest_symbols, ","));
    } catch (...) {
      std::free(*initial_symbols);
      *initial_symbols = nullptr;
      throw;
    }
  });
}

autosg_status autosg_is_left_identity(const autosg_automaton* a,
                                      const char*             state,
                                      int*                    result) {
  return guarded([&] {
    auto const& aut = automaton_of(a);
    require(state, "state");
    require(result, "result");
    *result = autosg::is_left_identity(aut, aut.state(state)) ? 1 : 0;
  });
}

autosg_status autosg_enumerate(const autosg_automaton* a,
                               size_t                  max_len,
                               size_t                  max_elements,
                               autosg_enumeration**    out) {
  return guarded([&] {
    auto const& aut = automaton_of(a);
    require(out, "out");
    auto result = std::make_unique<autosg_enumeration>();
    result->aut = std::make_shared<autosg::Automaton const>(aut);
    result->elements = autosg::enumerate(
        aut, max_len, or_default(max_elements, autosg::default_element_cap));
    *out = result.release();
  });
}

size_t autosg_enumeration_size(const autosg_enumeration* e) {
  return e == nullptr ? 0 : e->elements.size();
}

namespace {
  autosg::EnumeratedElement const& entry(autosg_enumeration const* e,
                                         std::size_t               index) {
    require(e, "enumeration");
    if (index >= e->elements.size()) {
      throw autosg::UsageError("element index out of range");
    }
    return e->elements[index];
  }
}  // namespace

autosg_status autosg_enumeration_word(const autosg_enumeration* e,
                                      size_t                    index,
                                      char**                    out) {
  return guarded([&] {
    auto const& item = entry(e, index);
    require(out, "out");
    *out = copy_string(item.representative.to_string(*e->aut));
  });
}

autosg_status autosg_enumeration_element_states(const autosg_enumeration* e,
                                                size_t                    index,
                                                size_t* states) {
  return guarded([&] {
    auto const& item = entry(e, index);
    require(states, "states");
    *states = item.element.number_of_states();
  });
}

autosg_status autosg_enumeration_element_text(const autosg_enumeration* e,
                                              size_t                    index,
                                              char**                    out) {
  return guarded([&] {
    auto const& item = entry(e, index);
    require(out, "out");
    *out = copy_string(autosg::serialize(item.element));
  });
}

void autosg_enumeration_free(autosg_enumeration* e) {
  delete e;
}

autosg_status autosg_growth(const autosg_automaton* a,
                            size_t                  max_len,
                            size_t                  max_elements,
                            size_t*                 counts) {
  return guarded([&] {
    auto const& aut = automaton_of(a);
    require(counts, "counts");
    auto const result = autosg::growth(
        aut, max_len, or_default(max_elements, autosg::default_element_cap));
    std::copy(result.begin(), result.end(), counts);
  });
}

autosg_status autosg_monoid_parse(const char* text, autosg_monoid** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new autosg_monoid{autosg::parse_monoid(text)};
  });
}

autosg_status autosg_monoid_load(const char* path, autosg_monoid** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new autosg_monoid{autosg::load_monoid(path)};
  });
}

void autosg_monoid_free(autosg_monoid* m) {
  delete m;
}

autosg_status autosg_construct_free_product(const autosg_automaton* left,
                                            const char* left_identity,
                                            const autosg_automaton* right,
                                            const char*        right_identity,
                                            autosg_automaton** out) {
  return guarded([&] {
    auto const& l = automaton_of(left);
    auto const& r = automaton_of(right);
    require(out, "out");
    *out = wrap(autosg::free_product(l,
                                     factor_state(l, left_identity, '1'),
                                     r,
                                     factor_state(r, right_identity, '2')));
  });
}

autosg_status autosg_construct_free_product_identity(
    const autosg_automaton* left,
    const autosg_automaton* right,
    int                     printed_table,
    autosg_automaton**      out) {
  return guarded([&] {
    auto const& l = automaton_of(left);
    auto const& r = automaton_of(right);
    require(out, "out");
    *out = wrap(
        autosg::free_product_adjoin_identity(l, r, printed_table != 0));
  });
}

autosg_status autosg_construct_direct_power(const autosg_automaton* a,
                                            size_t                  n,
                                            size_t                  cap,
                                            autosg_automaton**      out) {
  return guarded([&] {
    auto const& aut = automaton_of(a);
    require(out, "out");
    *out = wrap(autosg::direct_power(
        aut, n, or_default(cap, autosg::default_construction_cap)));
  });
}

autosg_status autosg_construct_wreath(const autosg_automaton* base,
                                      const autosg_monoid*    monoid,
                                      size_t                  cap,
                                      autosg_automaton**      out) {
  return guarded([&] {
    auto const& aut = automaton_of(base);
    require(monoid, "monoid");
    require(out, "out");
    *out = wrap(autosg::wreath_subsemigroup(
        aut, monoid->monoid, or_default(cap, autosg::default_construction_cap)));
  });
}

autosg_status autosg_construct_wreath_initial(const autosg_automaton* base,
                                              const autosg_monoid*    monoid,
                                              size_t                  cap,
                                              autosg_automaton**      out) {
  return guarded([&] {
    auto const& aut = automaton_of(base);
    require(monoid, "monoid");
    require(out, "out");
    *out = wrap(autosg::wreath_initial_symbol(
        aut, monoid->monoid, or_default(cap, autosg::default_construction_cap)));
  });
}

autosg_status autosg_construct_adjoin_identity(const autosg_automaton* a,
                                               autosg_automaton**      out) {
  return guarded([&] {
    auto const& aut = automaton_of(a);
    require(out, "out");
    *out = wrap(autosg::adjoin_identity_state(aut));
  });
}

autosg_status autosg_export_dot(const autosg_automaton* a, char** out) {
  return guarded([&] {
    auto const& aut = automaton_of(a);
    require(out, "out");
    *out = copy_string(autosg::export_dot(aut));
  });
}

const char* autosg_verify_suites(void) {
  static std::string const names = [] {
    std::string s;
    for (auto name : autosg::suite_names()) {
      s += (s.empty() ? "" : ",") + std::string(name);
    }
    return s;
  }();
  return names.c_str();
}

autosg_status autosg_verify(const char*               suite,
                            const autosg_verify_args* args,
                            char**                    report,
                            int*                      passed) {
  return guarded([&] {
    require(suite, "suite");
    require(args, "args");
    require(report, "report");
    require(passed, "passed");
    autosg::SuiteInputs in;
    if (args->automaton != nullptr) {
      in.automaton = args->automaton->doc.content;
    }
    if (args->state != nullptr) {
      in.state = args->state;
    }
    if (args->base != nullptr) {
      in.base = args->base->doc.content.automaton;
    }
    if (args->monoid != nullptr) {
      in.monoid = args->monoid->monoid;
    }
    in.max_len = or_default(args->max_len, in.max_len);
    in.max_k   = or_default(args->max_k, in.max_k);
    auto const result = autosg::run_suite(suite, in);
    *report = copy_string(result.to_text());
    *passed = result.passed() ? 1 : 0;
  });
}

}  // extern "C"
