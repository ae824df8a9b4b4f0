#include "kmon/words.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>

namespace kmon {

LetterSet content(WordView w) { return LetterSet(w.begin(), w.end()); }

Word delete_letters(WordView w, const LetterSet& removed) {
  Word out;
  out.reserve(w.size());
  for (Letter a : w)
    if (!removed.contains(a)) out.push_back(a);
  return out;
}

std::size_t count_factor2(WordView w, Letter a, Letter b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == a && w[i + 1] == b) ++n;
  return n;
}

Word fow(WordView w) {
  Word out;
  for (Letter a : w)
    if (out.find(a) == Word::npos) out.push_back(a);
  return out;
}

Word low(WordView w) {
  Word out;
  for (Letter a : w) {
    if (auto pos = out.find(a); pos != Word::npos) out.erase(pos, 1);
    out.push_back(a);
  }
  return out;
}

Jump::Jump(Letter x_, std::vector<Letter> gap_, Letter y_) : x(x_), gap(std::move(gap_)), y(y_) {
  std::sort(gap.begin(), gap.end());
  gap.erase(std::unique(gap.begin(), gap.end()), gap.end());
  if (std::binary_search(gap.begin(), gap.end(), x) || std::binary_search(gap.begin(), gap.end(), y))
    throw std::invalid_argument("jump gap must not contain its end letters");
}

namespace {

// Letters below this one sort before the end of an empty gap `{}`.
constexpr Letter kGapClose = U'}';

std::strong_ordering compare_gaps(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  if (a.size() == b.size()) return std::strong_ordering::equal;
  if (common == 0) {
    if (a.empty()) return b.front() < kGapClose ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.front() < kGapClose ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() < b.size() ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace

std::strong_ordering Jump::operator<=>(const Jump& other) const {
  if (auto c = x <=> other.x; c != 0) return c;
  if (auto c = compare_gaps(gap, other.gap); c != 0) return c;
  return y <=> other.y;
}

namespace {

// Integer keys for jumps over a sorted alphabet of k letters, L of them
// below kGapClose. A gap S of letter ids gets the rank of its text form
// among all gaps:
//   S empty:    2^k - 2^(k-L)
//   otherwise:  sum of 2^(k-1-t) over ids t not in S, plus 1 if min S >= L.
// Up to kMaxPackedAlphabet letters a key is a single word x | rank | y.
// Larger alphabets use 2 + ceil(k/64) words: x, the rank in 64-bit blocks
// (most significant first), y. Keys compare lexicographically by word.
constexpr std::size_t kMaxPackedAlphabet = 52;

class KeyCodec {
 public:
  explicit KeyCodec(std::span<const Letter> alphabet)
      : letters_(alphabet),
        k_(alphabet.size()),
        low_(static_cast<std::size_t>(std::lower_bound(alphabet.begin(), alphabet.end(), kGapClose) -
                                      alphabet.begin())),
        id_bits_(std::max<std::size_t>(1, static_cast<std::size_t>(std::bit_width(k_ == 0 ? 0 : k_ - 1)))),
        blocks_((k_ + 63) / 64) {}

  bool packed() const { return k_ <= kMaxPackedAlphabet; }
  std::size_t words() const { return packed() ? 1 : 2 + blocks_; }
  std::size_t alphabet_size() const { return k_; }
  std::size_t low_letters() const { return low_; }
  std::size_t id_bits() const { return id_bits_; }
  std::size_t blocks() const { return blocks_; }
  // Bits used by a packed key.
  std::size_t packed_bits() const { return 2 * id_bits_ + k_; }

  std::uint64_t pack(std::uint64_t x, std::uint64_t rank, std::uint64_t y) const {
    return (x << (k_ + id_bits_)) | (rank << id_bits_) | y;
  }

  // Rank arithmetic on blocks_ words, most significant first.
  void fill_all(std::uint64_t* r) const {
    for (std::size_t p = 0; p < k_; ++p) set_bit(r, p);
  }
  void set_bit(std::uint64_t* r, std::size_t p) const { r[blocks_ - 1 - p / 64] |= std::uint64_t{1} << (p % 64); }
  void clear_bit(std::uint64_t* r, std::size_t p) const {
    r[blocks_ - 1 - p / 64] &= ~(std::uint64_t{1} << (p % 64));
  }
  bool test_bit(const std::uint64_t* r, std::size_t p) const {
    return (r[blocks_ - 1 - p / 64] >> (p % 64)) & 1;
  }
  void add_one(std::uint64_t* r) const {
    for (std::size_t i = blocks_; i-- > 0;)
      if (++r[i] != 0) return;
  }
  bool sub_one(std::uint64_t* r) const {
    for (std::size_t i = blocks_; i-- > 0;)
      if (r[i]-- != 0) return true;
    return false;
  }
  void empty_rank(std::uint64_t* r) const {
    std::fill(r, r + blocks_, 0);
    for (std::size_t p = k_ - low_; p < k_; ++p) set_bit(r, p);
  }

  // Key words for x, sorted gap ids and y.
  void encode(std::uint32_t x, std::span<const std::uint32_t> gap, std::uint32_t y, std::uint64_t* out) const {
    std::vector<std::uint64_t> rank(blocks_, 0);
    if (gap.empty()) {
      empty_rank(rank.data());
    } else {
      fill_all(rank.data());
      for (std::uint32_t t : gap) clear_bit(rank.data(), k_ - 1 - t);
      if (gap.front() >= low_) add_one(rank.data());
    }
    if (packed()) {
      out[0] = pack(x, rank[0], y);
    } else {
      out[0] = x;
      std::copy(rank.begin(), rank.end(), out + 1);
      out[1 + blocks_] = y;
    }
  }

  Jump decode(const std::uint64_t* key) const {
    std::vector<std::uint64_t> rank(blocks_);
    std::uint64_t x = 0, y = 0;
    if (packed()) {
      const std::uint64_t id_mask = (std::uint64_t{1} << id_bits_) - 1;
      x = key[0] >> (k_ + id_bits_);
      y = key[0] & id_mask;
      rank[0] = (key[0] >> id_bits_) & ((std::uint64_t{1} << k_) - 1);
    } else {
      x = key[0];
      std::copy(key + 1, key + 1 + blocks_, rank.begin());
      y = key[1 + blocks_];
    }
    return Jump(letters_[x], gap_letters(rank), letters_[y]);
  }

 private:
  // Inverse of the rank formula.
  std::vector<Letter> gap_letters(std::vector<std::uint64_t> rank) const {
    std::vector<std::uint64_t> e(blocks_);
    empty_rank(e.data());
    if (rank == e) return {};
    auto members = [&](const std::vector<std::uint64_t>& r) {
      std::vector<Letter> out;
      for (std::size_t t = 0; t < k_; ++t)
        if (!test_bit(r.data(), k_ - 1 - t)) out.push_back(letters_[t]);
      return out;
    };
    std::vector<Letter> gap = members(rank);
    if (!gap.empty() && gap.front() < kGapClose) return gap;
    if (sub_one(rank.data())) {
      gap = members(rank);
      if (!gap.empty() && gap.front() >= kGapClose) return gap;
    }
    throw std::logic_error("invalid jump key");
  }

  std::span<const Letter> letters_;
  std::size_t k_;
  std::size_t low_;
  std::size_t id_bits_;
  std::size_t blocks_;
};

int compare_keys(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("jump count overflow");
  return out;
}

// LSD radix sort of `keys` on the low `bits` bits, in as few passes of at
// most 12 bits as possible, ping-ponging with `scratch` (same size). Returns
// whichever of the two holds the result.
std::span<std::uint64_t> radix_sort(std::span<std::uint64_t> keys, std::span<std::uint64_t> scratch,
                                    std::size_t bits) {
  constexpr std::size_t kMaxDigitBits = 12;
  const std::size_t passes = (bits + kMaxDigitBits - 1) / kMaxDigitBits;
  if (passes == 0) return keys;
  const std::size_t digit_bits = (bits + passes - 1) / passes;
  const std::uint64_t digit_mask = (std::uint64_t{1} << digit_bits) - 1;
  std::vector<std::size_t> offsets(std::size_t{1} << digit_bits);
  for (std::size_t shift = 0; shift < bits; shift += digit_bits) {
    std::fill(offsets.begin(), offsets.end(), 0);
    for (std::uint64_t key : keys) ++offsets[(key >> shift) & digit_mask];
    std::size_t sum = 0;
    for (auto& o : offsets) sum += std::exchange(o, sum);
    for (std::uint64_t key : keys) scratch[offsets[(key >> shift) & digit_mask]++] = key;
    std::swap(keys, scratch);
  }
  return keys;
}

// Order of the entries of a flat key array.
std::vector<std::size_t> key_order(const std::vector<std::uint64_t>& keys, std::size_t words) {
  std::vector<std::size_t> order(keys.size() / words);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare_keys(&keys[a * words], &keys[b * words], words) < 0;
  });
  return order;
}

// Dense ids for the letters of a word, assigned in ascending letter order so
// that ascending id order is ascending letter order.
struct Alphabet {
  std::vector<Letter> letters;
  std::vector<std::uint32_t> ids;  // ids[i] is the id of w[i]

  explicit Alphabet(WordView w) : letters(w.begin(), w.end()) {
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    ids.reserve(w.size());
    for (Letter a : w)
      ids.push_back(static_cast<std::uint32_t>(
          std::lower_bound(letters.begin(), letters.end(), a) - letters.begin()));
  }
  std::size_t size() const { return letters.size(); }
};

// Letters ordered by last observed position, least recent first. The
// candidates x with lop(x) >= lop(y) are exactly the suffix of this list
// starting at y (or the whole list if y is unseen), and the gap of such an x
// is the set of letters after x in the list.
class RecencyList {
 public:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  explicit RecencyList(std::size_t k) : prev_(k, kNone), next_(k, kNone), seen_(k, false) {}

  bool seen(std::uint32_t a) const { return seen_[a]; }
  std::uint32_t tail() const { return tail_; }
  std::uint32_t prev(std::uint32_t a) const { return prev_[a]; }

  void move_to_back(std::uint32_t a) {
    if (seen_[a]) {
      if (tail_ == a) return;
      unlink(a);
    }
    seen_[a] = true;
    prev_[a] = tail_;
    next_[a] = kNone;
    if (tail_ != kNone) next_[tail_] = a;
    tail_ = a;
    if (head_ == kNone) head_ = a;
  }

 private:
  void unlink(std::uint32_t a) {
    if (prev_[a] != kNone) next_[prev_[a]] = next_[a]; else head_ = next_[a];
    if (next_[a] != kNone) prev_[next_[a]] = prev_[a]; else tail_ = prev_[a];
  }

  std::vector<std::uint32_t> prev_, next_;
  std::vector<bool> seen_;
  std::uint32_t head_ = kNone, tail_ = kNone;
};

// Runs the scan, calling emit(x, gap, y) for every jump in descending lop(x)
// order within a position. `gap` is reset per position and grows by insert().
template <class Gap, class Emit>
void scan_jumps(const Alphabet& alpha, Gap& gap, Emit&& emit) {
  RecencyList recent(alpha.size());
  for (std::uint32_t y : alpha.ids) {
    gap.reset();
    const std::uint32_t stop = recent.seen(y) ? recent.prev(y) : RecencyList::kNone;
    for (std::uint32_t x = recent.tail(); x != stop; x = recent.prev(x)) {
      emit(x, gap, y);
      gap.insert(x);
    }
    recent.move_to_back(y);
  }
}

struct NoGap {
  void reset() {}
  void insert(std::uint32_t) {}
};

// Gap rank kept up to date under insertion, for one-word keys.
class PackedGap {
 public:
  explicit PackedGap(const KeyCodec& codec)
      : k_(codec.alphabet_size()),
        low_(codec.low_letters()),
        all_((std::uint64_t{1} << k_) - 1),
        empty_(all_ - ((std::uint64_t{1} << (k_ - low_)) - 1)) {}

  void reset() {
    complement_ = all_;
    min_ = kNoMin;
  }
  void insert(std::uint32_t t) {
    complement_ &= ~(std::uint64_t{1} << (k_ - 1 - t));
    min_ = std::min(min_, t);
  }
  std::uint64_t rank() const {
    if (min_ == kNoMin) return empty_;
    return complement_ + (min_ >= low_ ? 1 : 0);
  }

 private:
  static constexpr std::uint32_t kNoMin = ~std::uint32_t{0};
  std::size_t k_, low_;
  std::uint64_t all_, empty_;
  std::uint64_t complement_ = 0;
  std::uint32_t min_ = kNoMin;
};

// Same for multi-word keys.
class WideGap {
 public:
  explicit WideGap(const KeyCodec& codec) : codec_(codec), complement_(codec.blocks()), empty_(codec.blocks()) {
    codec_.empty_rank(empty_.data());
  }

  void reset() {
    std::fill(complement_.begin(), complement_.end(), 0);
    codec_.fill_all(complement_.data());
    min_ = kNoMin;
  }
  void insert(std::uint32_t t) {
    codec_.clear_bit(complement_.data(), codec_.alphabet_size() - 1 - t);
    min_ = std::min(min_, t);
  }
  void write_rank(std::uint64_t* out) const {
    if (min_ == kNoMin) {
      std::copy(empty_.begin(), empty_.end(), out);
      return;
    }
    std::copy(complement_.begin(), complement_.end(), out);
    if (min_ >= codec_.low_letters()) codec_.add_one(out);
  }

 private:
  static constexpr std::uint32_t kNoMin = ~std::uint32_t{0};
  const KeyCodec& codec_;
  std::vector<std::uint64_t> complement_, empty_;
  std::uint32_t min_ = kNoMin;
};

}  // namespace

JumpMultiset::JumpMultiset(const std::map<Jump, std::uint64_t>& counts) {
  std::set<Letter> letters;
  for (const auto& [j, n] : counts) {
    if (n == 0) continue;
    letters.insert(j.x);
    letters.insert(j.y);
    letters.insert(j.gap.begin(), j.gap.end());
  }
  alphabet_.assign(letters.begin(), letters.end());
  const KeyCodec codec(alphabet_);
  const std::size_t words = codec.words();
  auto id = [&](Letter a) {
    return static_cast<std::uint32_t>(std::lower_bound(alphabet_.begin(), alphabet_.end(), a) - alphabet_.begin());
  };

  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> values;
  for (const auto& [j, n] : counts) {
    if (n == 0) continue;
    std::vector<std::uint32_t> gap;
    for (Letter a : j.gap) gap.push_back(id(a));
    keys.resize(keys.size() + words);
    codec.encode(id(j.x), gap, id(j.y), &keys[keys.size() - words]);
    values.push_back(n);
  }
  for (std::size_t i : key_order(keys, words)) {
    keys_.insert(keys_.end(), keys.begin() + static_cast<std::ptrdiff_t>(i * words),
                 keys.begin() + static_cast<std::ptrdiff_t>((i + 1) * words));
    counts_.push_back(values[i]);
    total_ = checked_add(total_, values[i]);
  }
}

std::size_t JumpMultiset::key_words() const { return KeyCodec(alphabet_).words(); }

JumpMultiset::value_type JumpMultiset::entry(std::size_t i) const {
  const KeyCodec codec(alphabet_);
  return {codec.decode(&keys_[i * codec.words()]), counts_[i]};
}

std::uint64_t JumpMultiset::count(const Jump& j) const {
  auto id = [&](Letter a) -> std::optional<std::uint32_t> {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), a);
    if (it == alphabet_.end() || *it != a) return std::nullopt;
    return static_cast<std::uint32_t>(it - alphabet_.begin());
  };
  const auto x = id(j.x), y = id(j.y);
  if (!x || !y) return 0;
  std::vector<std::uint32_t> gap;
  for (Letter a : j.gap) {
    const auto t = id(a);
    if (!t) return 0;
    gap.push_back(*t);
  }
  const KeyCodec codec(alphabet_);
  const std::size_t words = codec.words();
  std::vector<std::uint64_t> key(words);
  codec.encode(*x, gap, *y, key.data());

  std::size_t lo = 0, hi = counts_.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const int c = compare_keys(&keys_[mid * words], key.data(), words);
    if (c == 0) return counts_[mid];
    if (c < 0) lo = mid + 1; else hi = mid;
  }
  return 0;
}

bool JumpMultiset::operator==(const JumpMultiset& other) const {
  // The alphabet is determined by the entries and the keys by the alphabet.
  return alphabet_ == other.alphabet_ && keys_ == other.keys_ && counts_ == other.counts_;
}

std::optional<JumpDifference> first_difference(const JumpMultiset& lhs, const JumpMultiset& rhs) {
  std::size_t a = 0, b = 0;
  const std::size_t na = lhs.distinct(), nb = rhs.distinct();
  if (lhs.alphabet_ == rhs.alphabet_) {
    const std::size_t words = lhs.key_words();
    while (a < na || b < nb) {
      const int c = a == na ? 1 : b == nb ? -1 : compare_keys(&lhs.keys_[a * words], &rhs.keys_[b * words], words);
      if (c < 0) return JumpDifference{lhs.entry(a).first, lhs.counts_[a], 0};
      if (c > 0) return JumpDifference{rhs.entry(b).first, 0, rhs.counts_[b]};
      if (lhs.counts_[a] != rhs.counts_[b]) return JumpDifference{lhs.entry(a).first, lhs.counts_[a], rhs.counts_[b]};
      ++a;
      ++b;
    }
    return std::nullopt;
  }
  while (a < na || b < nb) {
    if (a == na) return JumpDifference{rhs.entry(b).first, 0, rhs.counts_[b]};
    if (b == nb) return JumpDifference{lhs.entry(a).first, lhs.counts_[a], 0};
    auto [ja, ca] = lhs.entry(a);
    auto [jb, cb] = rhs.entry(b);
    if (ja < jb) return JumpDifference{std::move(ja), ca, 0};
    if (jb < ja) return JumpDifference{std::move(jb), 0, cb};
    if (ca != cb) return JumpDifference{std::move(ja), ca, cb};
    ++a;
    ++b;
  }
  return std::nullopt;
}

JumpMultiset jumps(WordView w) {
  JumpMultiset out;
  if (w.size() < 2) return out;
  const Alphabet alpha(w);
  const KeyCodec codec(alpha.letters);
  out.alphabet_ = alpha.letters;
  if (codec.packed()) {
    // Keys are laid out in one block per left letter x, so each block can be
    // sorted and counted on its own while it is still in cache.
    std::vector<std::size_t> block_start(alpha.size() + 1, 0);
    NoGap no_gap;
    scan_jumps(alpha, no_gap, [&](std::uint32_t x, const NoGap&, std::uint32_t) { ++block_start[x + 1]; });
    std::partial_sum(block_start.begin(), block_start.end(), block_start.begin());

    std::vector<std::uint64_t> keys(block_start.back());
    std::vector<std::size_t> next(block_start.begin(), block_start.end() - 1);
    PackedGap gap(codec);
    scan_jumps(alpha, gap, [&](std::uint32_t x, const PackedGap& g, std::uint32_t y) {
      keys[next[x]++] = codec.pack(x, g.rank(), y);
    });

    std::size_t largest = 0;
    for (std::size_t x = 0; x < alpha.size(); ++x) largest = std::max(largest, block_start[x + 1] - block_start[x]);
    std::vector<std::uint64_t> scratch(largest);
    std::vector<std::uint64_t> counts(keys.size());
    std::size_t distinct = 0;
    for (std::size_t x = 0; x < alpha.size(); ++x) {
      const std::span block(keys.data() + block_start[x], block_start[x + 1] - block_start[x]);
      const auto sorted = radix_sort(block, std::span(scratch.data(), block.size()), codec.packed_bits() - codec.id_bits());
      // Compacting into the front of `keys` never overtakes the unread blocks.
      for (std::uint64_t key : sorted) {
        if (distinct > 0 && keys[distinct - 1] == key) {
          ++counts[distinct - 1];
        } else {
          keys[distinct] = key;
          counts[distinct++] = 1;
        }
      }
    }
    keys.resize(distinct);
    counts.resize(distinct);
    out.total_ = block_start.back();
    out.keys_ = std::move(keys);
    out.counts_ = std::move(counts);
    out.keys_.shrink_to_fit();
    out.counts_.shrink_to_fit();
    return out;
  }

  const std::size_t words = codec.words();
  std::vector<std::uint64_t> keys;
  WideGap gap(codec);
  scan_jumps(alpha, gap, [&](std::uint32_t x, const WideGap& g, std::uint32_t y) {
    keys.push_back(x);
    keys.resize(keys.size() + codec.blocks());
    g.write_rank(&keys[keys.size() - codec.blocks()]);
    keys.push_back(y);
  });
  for (std::size_t i : key_order(keys, words)) {
    const std::uint64_t* key = &keys[i * words];
    const std::size_t n = out.counts_.size();
    if (n > 0 && compare_keys(&out.keys_[(n - 1) * words], key, words) == 0) {
      ++out.counts_.back();
    } else {
      out.keys_.insert(out.keys_.end(), key, key + words);
      out.counts_.push_back(1);
    }
  }
  out.total_ = keys.size() / words;
  return out;
}

JumpMultiset jumps_bruteforce(WordView w) {
  std::map<Jump, std::uint64_t> counts;
  for (std::size_t i = 0; i < w.size(); ++i) {
    LetterSet between;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!between.contains(w[i]) && !between.contains(w[j]))
        ++counts[Jump(w[i], std::vector<Letter>(between.begin(), between.end()), w[j])];
      between.insert(w[j]);
    }
  }
  return JumpMultiset(counts);
}

std::vector<TraceRow> jump_trace(WordView w) {
  const Alphabet alpha(w);
  std::vector<std::size_t> lop(alpha.size(), 0);
  std::vector<TraceRow> rows;
  rows.reserve(w.size());

  RecencyList recent(alpha.size());
  std::size_t position = 0;
  for (std::uint32_t y : alpha.ids) {
    ++position;
    TraceRow row;
    row.position = position;
    row.letter = alpha.letters[y];
    for (std::size_t a = 0; a < alpha.size(); ++a) row.lop.emplace_back(alpha.letters[a], lop[a]);

    std::vector<Letter> gap;
    const std::uint32_t stop = recent.seen(y) ? recent.prev(y) : RecencyList::kNone;
    for (std::uint32_t x = recent.tail(); x != stop; x = recent.prev(x)) {
      row.added.emplace_back(alpha.letters[x], gap, alpha.letters[y]);
      gap.push_back(alpha.letters[x]);
    }
    std::reverse(row.added.begin(), row.added.end());

    recent.move_to_back(y);
    lop[y] = position;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_utf8(Letter a) {
  const auto cp = static_cast<std::uint32_t>(a);
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string to_utf8(WordView w) {
  std::string out;
  for (Letter a : w) out += to_utf8(a);
  return out;
}

std::string render_set(const LetterSet& s) {
  std::string out = "{";
  bool first = true;
  for (Letter a : s) {
    if (!first) out += ',';
    out += to_utf8(a);
    first = false;
  }
  return out + "}";
}

std::string render_jump(const Jump& j, std::string_view empty_gap) {
  std::string out = "(" + to_utf8(j.x) + ",";
  if (j.gap.empty()) {
    out += empty_gap;
  } else {
    out += render_set(LetterSet(j.gap.begin(), j.gap.end()));
  }
  return out + "," + to_utf8(j.y) + ")";
}

}  // namespace kmon
