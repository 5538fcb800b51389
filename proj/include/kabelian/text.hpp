#pragma once

// Textual presentation of words. Letters 0..11 print either as "abcdefghijkl"
// or as digits "0123456789" (digits cover alphabets of size <= 10 only).

#include <string>
#include <string_view>

#include "kabelian/word.hpp"

namespace kabelian {

enum class Presentation { letters, digits };

// Accepts either presentation; the choice is inferred from the characters.
// Mixing the two presentations in one word is a domain error.
Word parse_word(std::string_view text);

std::string format_word(const Word& w, Presentation presentation);

// Canonical JSON object: {"k", "length", "prefix", "suffix", "counts"}, where
// prefix and suffix are letter arrays and counts is in k-gram code order.
std::string signature_json(const Signature& sig);

}  // namespace kabelian
