#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kmon/diagram.hpp"
#include "kmon/words.hpp"

namespace kmon::test {

/// ASCII string to word.
inline Word W(std::string_view s) { return Word(s.begin(), s.end()); }

/// Jump from ASCII pieces, e.g. J('x', "yz", 'x').
inline Jump J(char x, std::string_view gap, char y) {
  return Jump(static_cast<Letter>(x), std::vector<Letter>(gap.begin(), gap.end()), static_cast<Letter>(y));
}

inline JumpMultiset multiset(std::initializer_list<std::pair<Jump, std::uint64_t>> entries) {
  std::map<Jump, std::uint64_t> counts;
  for (const auto& [j, n] : entries) counts[j] += n;
  return JumpMultiset(counts);
}

/// Calls f on every word over `alphabet` of length <= max_len.
inline void for_each_word(std::string_view alphabet, std::size_t max_len, const std::function<void(const Word&)>& f) {
  Word w;
  std::function<void()> rec = [&] {
    f(w);
    if (w.size() == max_len) return;
    for (char a : alphabet) {
      w.push_back(static_cast<Letter>(a));
      rec();
      w.pop_back();
    }
  };
  rec();
}

/// Every subset of the letters of `s`.
inline std::vector<LetterSet> subsets(const LetterSet& s) {
  const std::vector<Letter> letters(s.begin(), s.end());
  std::vector<LetterSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << letters.size()); ++mask) {
    LetterSet y;
    for (std::size_t i = 0; i < letters.size(); ++i)
      if (mask >> i & 1) y.insert(letters[i]);
    out.push_back(std::move(y));
  }
  return out;
}

inline GeneratorWord G(std::string_view text) { return parse_generator_word(text); }

/// Scan of x^3yxyz^4xyz: position, letter, lop(x), lop(y), lop(z) before the
/// step, and the jumps added (gaps sorted).
struct ReferenceRow {
  std::size_t position;
  char letter;
  std::size_t lop_x, lop_y, lop_z;
  std::vector<std::string> added;
};

inline const std::vector<ReferenceRow>& reference_trace() {
  static const std::vector<ReferenceRow> rows = {
      {1, 'x', 0, 0, 0, {}},
      {2, 'x', 1, 0, 0, {"(x,{},x)"}},
      {3, 'x', 2, 0, 0, {"(x,{},x)"}},
      {4, 'y', 3, 0, 0, {"(x,{},y)"}},
      {5, 'x', 3, 4, 0, {"(x,{y},x)", "(y,{},x)"}},
      {6, 'y', 5, 4, 0, {"(y,{x},y)", "(x,{},y)"}},
      {7, 'z', 5, 6, 0, {"(x,{y},z)", "(y,{},z)"}},
      {8, 'z', 5, 6, 7, {"(z,{},z)"}},
      {9, 'z', 5, 6, 8, {"(z,{},z)"}},
      {10, 'z', 5, 6, 9, {"(z,{},z)"}},
      {11, 'x', 5, 6, 10, {"(x,{y,z},x)", "(y,{z},x)", "(z,{},x)"}},
      {12, 'y', 11, 6, 10, {"(y,{x,z},y)", "(z,{x},y)", "(x,{},y)"}},
      {13, 'z', 11, 12, 10, {"(z,{x,y},z)", "(x,{y},z)", "(y,{},z)"}},
  };
  return rows;
}

/// Aggregated multiset of the same scan.
inline JumpMultiset reference_multiset() {
  return multiset({{J('x', "", 'x'), 2}, {J('x', "", 'y'), 3}, {J('x', "y", 'x'), 1}, {J('y', "", 'x'), 1},
                   {J('y', "x", 'y'), 1}, {J('x', "y", 'z'), 2}, {J('y', "", 'z'), 2}, {J('z', "", 'z'), 3},
                   {J('x', "yz", 'x'), 1}, {J('y', "z", 'x'), 1}, {J('z', "", 'x'), 1}, {J('y', "xz", 'y'), 1},
                   {J('z', "x", 'y'), 1}, {J('z', "xy", 'z'), 1}});
}

}  // namespace kmon::test
