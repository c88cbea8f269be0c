#pragma once

#include <string>

#include "kummer/field_element.hpp"

namespace kummer {

// Canonical prefix serialization; stable across runs, suitable for golden
// files.  Grammar:
//   fe    := "(fe" termlist ")"          terms in slot order below, zeros omitted
//   term  := " (" mono " " rat ")"
//   mono  := "1" | product of sa, s1a, sb, s1b joined by "*"
//   rat   := "(/ " poly " " poly ")"     canonical form, monic-lex denominator
//   poly  := "(p" { " (m " da " " db " " coef ")" } ")"   lex-descending terms
//   coef  := q | "(i " q " " q ")"       q = canonical mpq string
// Slot order: (1, sa, s1a, sa*s1a) x (1, sb, s1b, sb*s1b), a-part major.

std::string to_string(const GaussianRational& q);
std::string to_string(const Poly& p);
std::string to_string(const Rat& r);
std::string to_string(const FieldElement& f);
std::string monomial_name(int mask);

}  // namespace kummer
