#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tangle4/state.hpp"

namespace tangle4 {

// Ket expressions are sums of coefficient-ket terms, e.g.
//
//     |0000> + |1111>
//     |0001>+|0010>+|0100>+|1000>+sqrt(2)|1111>
//     1/2|0011> - (1+2i)|0101> + 0.5i|1010>
//
// grammar (whitespace allowed between tokens):
//
//     expr   :=  ['+'|'-'] term { ('+'|'-') term }
//     term   :=  [coeff ['*']] ket
//     ket    :=  '|' four of '0'/'1' '>'
//     coeff  :=  atom { ('*'|'/') atom }
//     atom   :=  'i' | number ['i'] | 'sqrt' '(' number ')' ['i']
//             |  '(' signed-sum-of-atoms ')' ['i']
//
// An omitted coefficient means 1. Duplicate basis labels are summed.
// Anything richer (nested expressions, variables) is rejected with a
// parse_error carrying the offending position.

/// One parsed term: a complex coefficient and a 4-character 0/1 label.
struct KetTerm {
  Complex coefficient;
  std::string label;
};

/// Parsed form of a ket expression, in source order.
struct KetExpression {
  std::vector<KetTerm> terms;

  /// Accumulate the terms into a state vector (duplicates summed).
  PureState4 to_state() const;
};

/// Parse an expression; throws parse_error with position on bad input.
KetExpression parse_ket_expression(std::string_view text);

/// parse_ket_expression followed by to_state.
PureState4 parse_ket(std::string_view text);

/// Parse a standalone complex literal such as "2", "1/2", "-1+2i",
/// "sqrt(2)", "0.5i". The whole input must be consumed.
Complex parse_complex(std::string_view text);

/// Lossless text form of one complex number, reparseable by
/// parse_complex. Uses up to 17 significant digits.
std::string format_complex(Complex value);

/// Render a state as a ket expression that parse_ket maps back to the
/// exact same amplitudes. The zero state prints as "0|0000>".
std::string format_ket(const PureState4& state);

}  // namespace tangle4
