#ifndef LOOPCALC_WORD_HPP
#define LOOPCALC_WORD_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace loopcalc {

/// A letter of a free-group word. Letters are nonzero; -x is the inverse of x.
using Letter = int;
using Word = std::vector<Letter>;

Word inverse(std::span<const Letter> w);
Word free_reduce(std::span<const Letter> w);

/// Free reduction followed by stripping of mutually inverse first/last letters.
Word cyclic_reduce(std::span<const Letter> w);

/// Cyclic shift of w starting at index `start` (taken modulo |w|).
Word rotate(std::span<const Letter> w, std::size_t start);

/// Lexicographically least cyclic shift (Booth's algorithm).
Word least_rotation(std::span<const Letter> w);

/// Letters w[from], w[from+1], ..., w[to-1] read cyclically. from == to yields the empty word.
Word cyclic_segment(std::span<const Letter> w, std::size_t from, std::size_t to);

Word concat(std::span<const Letter> u, std::span<const Letter> v);

/// A free homotopy class of closed paths: a cyclically reduced word stored as its least
/// rotation. Orientation is significant; a class and its inverse are different classes.
class HomotopyClass {
public:
  HomotopyClass() = default;

  /// Canonical class of the closed path spelled by `w`.
  static HomotopyClass of(std::span<const Letter> w);

  const Word& word() const { return word_; }
  bool trivial() const { return word_.empty(); }
  HomotopyClass inverse() const;

  auto operator<=>(const HomotopyClass&) const = default;

private:
  Word word_;
};

}  // namespace loopcalc

#endif  // LOOPCALC_WORD_HPP
