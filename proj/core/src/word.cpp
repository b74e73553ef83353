#include "cospec/word.hpp"

#include "cospec/errors.hpp"

#include <algorithm>
#include <cctype>

namespace cospec {

char to_char(ModuleKind kind) { return static_cast<char>(kind); }

Word::Word(std::vector<ModuleKind> letters) : letters_(std::move(letters)) {
  if (letters_.size() < 3)
    throw LengthError("word must have at least 3 letters, got " +
                      std::to_string(letters_.size()));
  for (auto l : letters_) {
    if (l == ModuleKind::P) ++ell_;
    if (l == ModuleKind::C) ++m_;
  }
}

Word Word::rotated(std::size_t shift) const {
  std::vector<ModuleKind> out(letters_);
  std::rotate(out.begin(), out.begin() + static_cast<long>(shift % out.size()), out.end());
  return Word(std::move(out));
}

Word Word::reversed() const { return Word({letters_.rbegin(), letters_.rend()}); }

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (auto l : letters_) s.push_back(to_char(l));
  return s;
}

Word parse_word(std::string_view text) {
  std::vector<ModuleKind> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    switch (std::toupper(static_cast<unsigned char>(ch))) {
      case 'P': letters.push_back(ModuleKind::P); break;
      case 'C': letters.push_back(ModuleKind::C); break;
      case 'E': letters.push_back(ModuleKind::E); break;
      default:
        throw AlphabetError("illegal module letter '" + std::string(1, ch) + "' in '" +
                            std::string(text) + "'");
    }
  }
  return Word(std::move(letters));
}

Word toggle(const Word& w) {
  std::vector<ModuleKind> out;
  out.reserve(w.tau());
  for (auto l : w.letters()) {
    if (l == ModuleKind::P)
      out.push_back(ModuleKind::C);
    else if (l == ModuleKind::C)
      out.push_back(ModuleKind::P);
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

bool cyclic_equivalent(const Word& a, const Word& b) {
  if (a.tau() != b.tau() || a.ell() != b.ell() || a.m() != b.m()) return false;
  const Word rev = a.reversed();
  for (std::size_t s = 0; s < a.tau(); ++s)
    if (a.rotated(s) == b || rev.rotated(s) == b) return true;
  return false;
}

Word canonical_form(const Word& w) {
  std::string best = w.str();
  Word best_word = w;
  const Word rev = w.reversed();
  for (std::size_t s = 0; s < w.tau(); ++s) {
    for (const Word& cand : {w.rotated(s), rev.rotated(s)}) {
      std::string cs = cand.str();
      if (cs < best) {
        best = std::move(cs);
        best_word = cand;
      }
    }
  }
  return best_word;
}

std::vector<Word> all_words(std::size_t tau) {
  static constexpr ModuleKind kAlphabet[] = {ModuleKind::C, ModuleKind::E, ModuleKind::P};
  std::vector<Word> out;
  std::vector<std::size_t> digits(tau, 0);
  while (true) {
    std::vector<ModuleKind> letters(tau);
    for (std::size_t i = 0; i < tau; ++i) letters[i] = kAlphabet[digits[i]];
    out.emplace_back(std::move(letters));
    std::size_t pos = tau;
    while (pos > 0 && ++digits[pos - 1] == 3) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

std::vector<Word> canonical_words(std::size_t tau) {
  std::vector<Word> out;
  for (const Word& w : all_words(tau))
    if (canonical_form(w) == w) out.push_back(w);
  return out;
}

}  // namespace cospec
