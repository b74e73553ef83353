#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cospec {

enum class ModuleKind : char { P = 'P', C = 'C', E = 'E' };

char to_char(ModuleKind kind);

// A cyclic word over {P, C, E} of length at least three. Letters are
// stored linearly from an arbitrary start module; cyclic structure is
// only observed through cyclic_equivalent() and canonical_form().
class Word {
 public:
  // Throws LengthError for fewer than three letters.
  explicit Word(std::vector<ModuleKind> letters);

  const std::vector<ModuleKind>& letters() const { return letters_; }
  ModuleKind operator[](std::size_t i) const { return letters_[i]; }

  std::size_t tau() const { return letters_.size(); }
  std::size_t ell() const { return ell_; }  // number of P
  std::size_t m() const { return m_; }      // number of C
  std::size_t e_count() const { return tau() - ell_ - m_; }

  Word rotated(std::size_t shift) const;
  Word reversed() const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator<(const Word& a, const Word& b) { return a.str() < b.str(); }

 private:
  std::vector<ModuleKind> letters_;
  std::size_t ell_ = 0;
  std::size_t m_ = 0;
};

// Case-insensitive. Throws AlphabetError / LengthError.
Word parse_word(std::string_view text);

// P <-> C, E fixed.
Word toggle(const Word& w);

// True iff b is a rotation of a or of a reversed.
bool cyclic_equivalent(const Word& a, const Word& b);

// Lexicographically least word among all rotations and reversed rotations.
Word canonical_form(const Word& w);

// Every word of length tau, in lexicographic order (3^tau of them).
std::vector<Word> all_words(std::size_t tau);

// One representative (the canonical form) per dihedral class, sorted.
std::vector<Word> canonical_words(std::size_t tau);

}  // namespace cospec
