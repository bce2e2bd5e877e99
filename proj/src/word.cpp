#include "word.hpp"

#include <algorithm>

namespace fpg {

Word Word::from_string(std::string_view text) {
  // Accepts the compact '0'/'1' encoding as well as the spelled-out
  // "x0x1" form; "" and "e" both denote the empty word.
  if (text == "e") return Word();
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == 'x') {
      ++i;
      if (i >= text.size()) throw ParseError("dangling 'x' in word", i);
      c = text[i];
    }
    if (c == '0')
      w = w.appended(Letter::x0);
    else if (c == '1')
      w = w.appended(Letter::x1);
    else
      throw ParseError(std::string("bad letter '") + c + "' in word", i);
    ++i;
  }
  return w;
}

Word Word::subword(std::uint32_t mask) const {
  Word w;
  for (std::size_t i = 0; i < size_; ++i)
    if (mask & (1u << i)) w = w.appended(at(i));
  return w;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i)
    s.push_back(at(i) == Letter::x0 ? '0' : '1');
  return s;
}

std::vector<Word> Word::all_up_to_wdeg(int bound) {
  std::vector<Word> words;
  if (bound < 0) return words;
  words.push_back(Word());
  // Grow by appending letters; a word enters once, when first reachable.
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word w = words[i];
    if (w.wdeg() + 1 <= bound) words.push_back(w.appended(Letter::x1));
    if (w.wdeg() + 2 <= bound) words.push_back(w.appended(Letter::x0));
  }
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace fpg
