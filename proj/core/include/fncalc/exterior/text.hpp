#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fncalc/exterior/vector_field.hpp"

namespace fncalc::exterior {

/// Malformed form text. `position()` is the byte offset of the offending input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses text such as "3/2*x1^2 e{1,2,3} - e{4,5}" on `space`.
///
/// Grammar (whitespace is insignificant between tokens):
///
///   form    := '0' | term (('+' | '-') term)*        first term may carry a leading '-'
///   term    := scalar ['*' factors] [basis] | factors [basis] | basis
///   scalar  := rational | rational 'i' | 'i' | '(' rational ('+'|'-') [rational] 'i' ')'
///   factors := factor ('*' factor)*
///   factor  := 'x' label ['^' power]              (affine spaces)
///            | 'exp(i<' int (',' int)* '>)'        (toroidal spaces, n integers)
///   basis   := 'e{' label (',' label)* '}' | '1'
///
/// Labels are 1-based and strictly increasing. A term without a basis is a
/// 0-form term. `degree` fixes the degree of a zero result and must agree
/// with the parsed degree otherwise.
DifferentialForm parse_form(std::string_view text, const ModelSpace& space,
                            std::optional<int> degree = std::nullopt);

/// Canonical text: terms ordered by multi-index then exponent, one monomial
/// per term, "0" for the zero form. parse_form(to_string(a)) == a.
std::string to_string(const DifferentialForm& a);

/// Parses "(form)⊗e_i" terms joined by '+' or '-'. Parentheses may be dropped
/// around a single term, and "e7" is accepted for "e_7".
VectorValuedForm parse_vector_form(std::string_view text, const ModelSpace& space,
                                   std::optional<int> degree = std::nullopt);

/// Canonical text "(α_1)⊗e1 + (α_3)⊗e3" over the nonzero components, "0" when zero.
std::string to_string(const VectorValuedForm& k);

}  // namespace fncalc::exterior
