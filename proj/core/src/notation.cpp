#include "affkl/notation.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "affkl/coxeter.hpp"

namespace affkl {

std::string format_word(const std::vector<int>& word) {
  std::string out;
  for (int i : word) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(i);
  }
  return out;
}

std::string format_element(const GroupElement& g) {
  const NormalForm nf = normal_form(g);
  std::string out;
  const std::int64_t k = pi_index(nf.pi_part);
  if (k != 0) {
    if (g.datum().is_type_a())
      out = k == 1 ? "pi" : "pi^" + std::to_string(k);
    else
      out = "pi[" + std::to_string(k) + "]";
  }
  const std::string word = format_word(nf.word);
  if (!out.empty() && !word.empty()) out += ' ';
  out += word;
  return out.empty() ? "e" : out;
}

std::string format_window(const Window& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + std::to_string(w[i]);
  return out;
}

std::string format_vec(const Vec& v, int dim) { return to_string(v, dim); }

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RootDatum& d) : text_(text), d_(d) {}

  GroupElement run() {
    skip_separators();
    if (peek() == '[') {
      const std::size_t start = pos_;
      const auto window = parse_bracket_list();
      skip_separators();
      if (pos_ != text_.size()) throw ParseError("unexpected trailing input after window", pos_);
      try {
        require_type_a(d_, "window notation");
        return element_of(d_, window);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), start);
      }
    }
    GroupElement g = GroupElement::identity(d_);
    while (pos_ < text_.size()) {
      g = g * parse_token();
      skip_separators();
    }
    return g;
  }

  std::vector<std::int64_t> parse_bracket_list() {
    expect('[');
    std::vector<std::int64_t> out;
    skip_spaces();
    if (peek() == ']') {
      ++pos_;
      return out;
    }
    for (;;) {
      skip_spaces();
      out.push_back(parse_int());
      skip_spaces();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      return out;
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
      ++pos_;
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  bool at_token_end() const {
    const char c = peek();
    return c == '\0' || c == '*' || std::isspace(static_cast<unsigned char>(c));
  }

  std::int64_t parse_int() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::int64_t v = 0;
    const char* b = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(b, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_ || pos_ == start)
      throw ParseError("expected an integer", start);
    return v;
  }

  std::int64_t parse_braced_int() {
    if (peek() == '{') {
      ++pos_;
      const auto v = parse_int();
      expect('}');
      return v;
    }
    return parse_int();
  }

  GroupElement parse_token() {
    const std::size_t start = pos_;
    if (consume("pi")) {
      std::int64_t k = 1;
      if (peek() == '^') {
        ++pos_;
        k = parse_braced_int();
      } else if (peek() == '[') {
        ++pos_;
        k = parse_int();
        expect(']');
      }
      if (!at_token_end()) throw ParseError("malformed pi token", start);
      try {
        if (d_.is_type_a()) {
          const GroupElement pi = pi_generator(d_);
          const GroupElement base = k >= 0 ? pi : pi.inverse();
          GroupElement g = GroupElement::identity(d_);
          const std::int64_t reps = d_.family() == DatumFamily::kSL ? ((k % d_.type_a_n()) + d_.type_a_n()) % d_.type_a_n()
                                                                     : (k >= 0 ? k : -k);
          for (std::int64_t i = 0; i < reps; ++i) g = g * (d_.family() == DatumFamily::kSL ? pi : base);
          return g;
        }
        return pi_element(d_, k);
      } catch (const std::out_of_range& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (consume("id") || consume("e")) {
      if (!at_token_end()) throw ParseError("malformed identity token", start);
      return GroupElement::identity(d_);
    }
    if (peek() == 's') {
      ++pos_;
      if (peek() == '_') ++pos_;
      const std::int64_t i = parse_braced_int();
      if (!at_token_end()) throw ParseError("malformed generator token", start);
      if (i < 0 || i > d_.rank() || d_.rank() == 0)
        throw ParseError("generator index " + std::to_string(i) + " out of range for " + d_.descriptor(), start);
      return GroupElement::simple(d_, static_cast<int>(i));
    }
    throw ParseError("unrecognized token", start);
  }

  std::string_view text_;
  const RootDatum& d_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupElement parse_element(std::string_view text, const RootDatum& d) { return Parser(text, d).run(); }

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  if (s.empty() || s.front() != '[') s = "[" + s + "]";
  const RootDatum& dummy = RootDatum::sl(1);
  return Parser(s, dummy).parse_bracket_list();
}

}  // namespace affkl
