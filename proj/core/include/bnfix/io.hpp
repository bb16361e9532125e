#pragma once

#include <string>

#include "bnfix/digraph.hpp"
#include "bnfix/network.hpp"

namespace bnfix {

// Network files come in two forms.
//
// TABLE:            FORMULA:
//   n 3               f1 = x1 & x2 & x3
//   000 000           f2 = x1 & !x3
//   001 000           f3 = x2 & !x1
//   ... (all 2^n rows, lexicographic)
//
// Formula grammar: expr := term ('|' term)*; term := factor ('&' factor)*;
// factor := '!' factor | '(' expr ')' | 'x'digits | '0' | '1'. The unicode
// operators for and/or/not are accepted as synonyms. Bit order is component
// 1 leftmost in both forms. Blank lines and '#' comments are ignored.
BooleanNetwork parse_network(const std::string& text);

// Canonical TABLE form, the round-trip target of parse_network.
std::string emit_network(const BooleanNetwork& f);

// Digraph files: header "n <count>", then one "i j" line per arc i -> j.
// Duplicate arcs and out-of-range endpoints are rejected.
Digraph parse_digraph(const std::string& text);
std::string emit_digraph(const Digraph& g);

// DOT renderings, deterministically ordered.
std::string export_dot(const Digraph& g);
std::string export_dot_interaction(const BooleanNetwork& f);
std::string export_dot_async(const BooleanNetwork& f, bool force = false);

// Word arguments: comma/space-separated integers, or, when n <= 9, a compact
// digit string ("1231" = 1,2,3,1). A bare token that is all digits is read
// compactly iff n <= 9. Empty input is the empty word.
Word parse_word_arg(const std::string& text, int n);

std::string format_word(const Word& w);          // "2 1 3"
std::string format_word_csv(const Word& w);      // "2,1,3"
std::string format_word_compact(const Word& w);  // "213", "" above digit 9

}  // namespace bnfix
