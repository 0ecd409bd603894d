#pragma once

#include <string>
#include <vector>

#include "nilform/group.hpp"

namespace nilform {

// Strict JSON document {"forms":[...],"m":M,"n":N}; entries are bounded to
// 64-bit integers in the interchange format even though the core arithmetic
// is unbounded.
SkewTriple parse_triple(const std::string& text);

// Canonical serialization: sorted keys, no whitespace.  Rejects entries
// outside the 64-bit interchange range so parse(emit(t)) always round-trips.
std::string emit_triple(const SkewTriple& t);

// Element text "a1,...,am;b1,...,bn"; either side may be empty when the
// matching rank is zero.
GroupElement parse_element(const std::string& text, const SkewTriple& t);
std::string emit_element(const GroupElement& x);

// "p/q" or "p".
Rat parse_rational(const std::string& text);
std::string emit_rational(const Rat& q);

// Comma-separated rationals; empty text gives an empty list.
std::vector<Rat> parse_rational_list(const std::string& text);

// Comma-separated integers, length-checked.
std::vector<Int> parse_int_vector(const std::string& text, int expected);

}  // namespace nilform
