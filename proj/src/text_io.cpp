#include "mfact/text_io.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "mfact/error.hpp"

namespace mfact {

namespace {

bool is_sep(char ch) { return std::isspace(static_cast<unsigned char>(ch)) || ch == ','; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Reads an integer at pos and advances past it.
int read_int(std::string_view text, std::size_t& pos) {
  int value = 0;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first)
    throw Error(Errc::malformed, "expected an integer at offset " + std::to_string(pos) + " in \"" +
                                     std::string(text) + "\"");
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

// "(a b c)(d e)" -> {{a,b,c},{d,e}}; "()" yields one empty group.
std::vector<std::vector<int>> parse_groups(std::string_view text) {
  std::vector<std::vector<int>> groups;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && is_sep(text[pos]))
      ++pos;
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      throw Error(Errc::malformed, "expected '(' at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<int> group;
    while (true) {
      while (pos < text.size() && is_sep(text[pos]))
        ++pos;
      if (pos == text.size())
        throw Error(Errc::malformed, "unterminated '(' in \"" + std::string(text) + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      group.push_back(read_int(text, pos));
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

}  // namespace

std::string format_permutation(const Permutation& s) {
  std::string out;
  for (const auto& cyc : cycles(s)) {
    if (cyc.size() < 2)
      continue;
    out += '(';
    for (std::size_t p = 0; p < cyc.size(); ++p) {
      if (p)
        out += ' ';
      out += std::to_string(cyc[p]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_permutation(int n, std::string_view text) {
  auto groups = parse_groups(text);
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  return Permutation::from_cycles(n, groups);
}

Permutation parse_permutation_any(int n, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (n < 1)
      throw Error(Errc::malformed, "cycle notation needs the number of points");
    return parse_permutation(n, text);
  }
  if (!text.empty() && text.front() == '[' && text.back() == ']')
    text = text.substr(1, text.size() - 2);
  Permutation p(parse_int_list(text));
  if (n > 0 && p.n() != n)
    throw Error(Errc::size_mismatch, "expected a permutation of " + std::to_string(n) + " points, got " +
                                         std::to_string(p.n()));
  return p;
}

std::string format_chain(const Chain& c) {
  if (c.length() == 0)
    return "()";
  std::string out;
  for (const auto& t : c.steps())
    out += '(' + std::to_string(t.i) + ' ' + std::to_string(t.j) + ')';
  return out;
}

Chain parse_chain(int n, std::string_view text) {
  std::vector<Transposition> steps;
  const auto groups = parse_groups(text);
  if (groups.size() == 1 && groups.front().empty())
    return Chain(n, {});
  for (const auto& g : groups) {
    if (g.size() != 2)
      throw Error(Errc::malformed, "each chain step must be a pair (i j)");
    if (g[0] == g[1])
      throw Error(Errc::malformed, "step (" + std::to_string(g[0]) + " " + std::to_string(g[1]) + ") is not a transposition");
    steps.push_back(Transposition::unordered(g[0], g[1]));
  }
  return Chain(n, std::move(steps));
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && is_sep(text[pos]))
      ++pos;
    if (pos == text.size())
      break;
    out.push_back(read_int(text, pos));
    if (pos < text.size() && !is_sep(text[pos]))
      throw Error(Errc::malformed, "unexpected character '" + std::string(1, text[pos]) + "' in \"" +
                                       std::string(text) + "\"");
  }
  return out;
}

std::string format_int_list(const std::vector<int>& v, std::string_view sep) {
  std::string out;
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (p)
      out += sep;
    out += std::to_string(v[p]);
  }
  return out;
}

}  // namespace mfact
