#include "autosg/names.hpp"

#include <algorithm>
#include <cctype>

namespace autosg {

  namespace {
    bool is_blank(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }
  }  // namespace

  std::string_view trim(std::string_view text) noexcept {
    while (!text.empty() && is_blank(text.front())) {
      text.remove_prefix(1);
    }
    while (!text.empty() && is_blank(text.back())) {
      text.remove_suffix(1);
    }
    return text;
  }

  std::vector<std::string> split_top_level(std::string_view text,
                                           char             separator) {
    std::vector<std::string> result;
    if (trim(text).empty()) {
      return result;
    }
    int         depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        --depth;
      } else if (c == separator && depth == 0) {
        result.emplace_back(trim(text.substr(start, i - start)));
        start = i + 1;
      }
    }
    result.emplace_back(trim(text.substr(start)));
    return result;
  }

  std::optional<std::string> name_problem(std::string_view name) {
    if (name.empty()) {
      return "empty name";
    }
    if (std::any_of(name.begin(), name.end(), is_blank)) {
      return "name contains whitespace";
    }
    if (name.find("->") != std::string_view::npos) {
      return "name contains \"->\"";
    }
    int depth = 0;
    for (char c : name) {
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (--depth < 0) {
          return "unbalanced parentheses";
        }
      } else if (c == ',' && depth == 0) {
        return "comma outside parentheses";
      }
    }
    if (depth != 0) {
      return "unbalanced parentheses";
    }
    return std::nullopt;
  }

  std::string join(std::vector<std::string> const& parts,
                   std::string_view                 separator) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i != 0) {
        out += separator;
      }
      out += parts[i];
    }
    return out;
  }

  std::string fresh_name(std::string const&              base,
                         std::vector<std::string> const& taken) {
    std::string candidate = base;
    while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) {
      candidate += '\'';
    }
    return candidate;
  }

}  // namespace autosg
