#pragma once

// Word combinatorics: content, deletion, factor counting, first/last
// occurrence words and jump multisets.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kmon {

/// A letter is any Unicode scalar value. Ordering is numeric.
using Letter = char32_t;

/// Words are plain sequences of letters; the empty word is the empty string.
using Word = std::u32string;
using WordView = std::u32string_view;

/// Sorted, duplicate-free set of letters.
using LetterSet = std::set<Letter>;

LetterSet content(WordView w);

/// w_Y: the word with every occurrence of a letter in `removed` dropped.
Word delete_letters(WordView w, const LetterSet& removed);

/// Number of positions i with w[i] == a and w[i+1] == b.
std::size_t count_factor2(WordView w, Letter a, Letter b);

/// First occurrence word.
Word fow(WordView w);

/// Last occurrence word, computed online left to right.
Word low(WordView w);

/// (x, G, y) with x, y not in G. The gap is kept sorted.
///
/// Jumps are ordered as their canonical forms `(x,{a,b},y)` compare
/// bytewise (for letters other than the punctuation of that form): by x,
/// then gap, then y. Gaps compare letter by letter, a gap sorts after its
/// own extensions, and the empty gap sorts after gaps whose least letter is
/// below `}` and before all others.
struct Jump {
  Letter x{};
  std::vector<Letter> gap;
  Letter y{};

  Jump() = default;
  Jump(Letter x, std::vector<Letter> gap, Letter y);

  std::strong_ordering operator<=>(const Jump& other) const;
  bool operator==(const Jump&) const = default;
};

struct JumpDifference;

/// Immutable multiset of jumps in jump order. Never stores a zero count.
///
/// Entries are kept as sorted integer keys over the sorted alphabet of
/// the letters involved; iteration decodes them into Jump values.
class JumpMultiset {
 public:
  using value_type = std::pair<Jump, std::uint64_t>;

  class const_iterator {
   public:
    using value_type = JumpMultiset::value_type;
    using difference_type = std::ptrdiff_t;

    const_iterator() = default;
    value_type operator*() const { return set_->entry(index_); }
    const_iterator& operator++() {
      ++index_;
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++index_;
      return old;
    }
    bool operator==(const const_iterator& other) const { return index_ == other.index_; }

   private:
    friend class JumpMultiset;
    const_iterator(const JumpMultiset* set, std::size_t index) : set_(set), index_(index) {}
    const JumpMultiset* set_ = nullptr;
    std::size_t index_ = 0;
  };

  JumpMultiset() = default;
  /// Entries with count 0 are dropped.
  explicit JumpMultiset(const std::map<Jump, std::uint64_t>& counts);

  std::uint64_t count(const Jump& j) const;

  /// Number of distinct jumps.
  std::size_t distinct() const { return counts_.size(); }
  /// Sum of all multiplicities.
  std::uint64_t total() const { return total_; }
  bool empty() const { return counts_.empty(); }

  /// The i-th entry in jump order.
  value_type entry(std::size_t i) const;

  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, counts_.size()}; }

  bool operator==(const JumpMultiset& other) const;

 private:
  friend JumpMultiset jumps(WordView w);
  friend std::optional<JumpDifference> first_difference(const JumpMultiset&, const JumpMultiset&);

  std::vector<Letter> alphabet_;  // letters occurring in some entry, sorted
  std::vector<std::uint64_t> keys_;  // key_words() words per entry
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;

  std::size_t key_words() const;
};

/// Least jump (in jump order) whose multiplicities differ, if any.
struct JumpDifference {
  Jump jump;
  std::uint64_t lhs_count = 0;
  std::uint64_t rhs_count = 0;
};
std::optional<JumpDifference> first_difference(const JumpMultiset& lhs, const JumpMultiset& rhs);

/// Jump multiset by the left-to-right last-observed-position scan.
JumpMultiset jumps(WordView w);

/// Jump multiset by enumerating every pair of positions. Quadratic; used
/// as an oracle for `jumps`.
JumpMultiset jumps_bruteforce(WordView w);

/// One step of the jump scan. `lop` holds the state before position
/// `position` is processed, one entry per letter of the content (sorted),
/// 0 meaning not yet seen.
struct TraceRow {
  std::size_t position = 0;  // 1-based
  Letter letter{};
  std::vector<std::pair<Letter, std::size_t>> lop;
  std::vector<Jump> added;
};

/// Jumps added at each position, emitted in ascending order of lop(x).
std::vector<TraceRow> jump_trace(WordView w);

// Text forms.

/// UTF-8 encoding of a single letter or a word.
std::string to_utf8(Letter a);
std::string to_utf8(WordView w);

/// `(x,{a,b},y)`; an empty gap renders as `{}` or, with `empty_gap`, as
/// the given token (e.g. "∅").
std::string render_jump(const Jump& j, std::string_view empty_gap = "{}");

/// `{a,b,c}` in ascending order.
std::string render_set(const LetterSet& s);

}  // namespace kmon
