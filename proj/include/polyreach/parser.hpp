// Surface syntax for formulas.
//
//   atoms      [a-zA-Z][a-zA-Z0-9_]*  (except the keywords gamma, pi, T, F)
//   unary      ~f  []f  <>f  pi f
//   binary     f & g   f | g   f -> g   f <-> g
//   other      gamma(f, g)   T   F   ( f )
//
// Precedence, tightest first: unary, &, |, -> (right associative), <->.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polyreach/formula.hpp"

namespace polyreach {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    // Byte offset into the input (0-based).
    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

Formula parse_formula(std::string_view text);

// Canonical core printing: no re-sugaring except T and F, so that
// parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

bool is_identifier(std::string_view s) noexcept;

} // namespace polyreach
