#include "kabelian/text.hpp"

#include <json.hpp>

#include "kabelian/error.hpp"

namespace kabelian {

namespace {

constexpr std::string_view kLetterGlyphs = "abcdefghijkl";
constexpr std::string_view kDigitGlyphs = "0123456789";

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  bool saw_letter = false;
  bool saw_digit = false;
  for (char ch : text) {
    if (auto pos = kLetterGlyphs.find(ch); pos != std::string_view::npos) {
      saw_letter = true;
      letters.push_back(static_cast<Letter>(pos));
    } else if (auto dpos = kDigitGlyphs.find(ch);
               dpos != std::string_view::npos) {
      saw_digit = true;
      letters.push_back(static_cast<Letter>(dpos));
    } else {
      fail(ErrorCode::domain,
           std::string("unexpected character '") + ch + "' in word");
    }
  }
  if (saw_letter && saw_digit) {
    fail(ErrorCode::domain, "word mixes letter and digit presentations");
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w, Presentation presentation) {
  const std::string_view glyphs =
      presentation == Presentation::digits ? kDigitGlyphs : kLetterGlyphs;
  std::string out;
  out.reserve(w.size());
  for (Letter c : w) {
    if (c >= glyphs.size()) {
      fail(ErrorCode::domain, "letter " + std::to_string(int{c}) +
                                  " has no glyph in this presentation");
    }
    out.push_back(glyphs[c]);
  }
  return out;
}

std::string signature_json(const Signature& sig) {
  nlohmann::ordered_json j;
  j["k"] = sig.k;
  j["length"] = sig.length;
  j["prefix"] = std::vector<int>(sig.prefix.begin(), sig.prefix.end());
  j["suffix"] = std::vector<int>(sig.suffix.begin(), sig.suffix.end());
  j["counts"] = sig.counts;
  return j.dump();
}

}  // namespace kabelian
