#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "affkl/group_element.hpp"
#include "affkl/type_a.hpp"

namespace affkl {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Normal form `pi^k s_i1 ... s_il`: the Pi-part first, then the reduced word
/// taking the smallest left descent at every step.  The identity is "e".
/// Type A prints pi^k; other data print the Pi-part as pi[j] (the class of
/// varpi_j).
std::string format_element(const GroupElement& g);
std::string format_word(const std::vector<int>& word);

/// Accepts a product of tokens separated by spaces or '*': s_i / si / s_{i},
/// pi, pi^k, pi^{k}, pi[j], e, id; or a type A window [w1,...,wn].  The empty
/// string is the identity.
GroupElement parse_element(std::string_view text, const RootDatum& d);

/// "5 2 4 7".
std::string format_window(const Window& w);
/// "[c1,...,cn]".
std::string format_vec(const Vec& v, int dim);
/// Comma separated integers, optionally bracketed.
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace affkl
