#pragma once

// Elements of the Kauffman monoid K_n as Temperley-Lieb diagrams: a
// non-crossing perfect matching of n top and n bottom points plus a count of
// closed loops (the power of c).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kmon {

/// Generator c (index 0) or h_i (index i >= 1).
struct Generator {
  std::size_t index = 0;

  static constexpr Generator c() { return Generator{0}; }
  static constexpr Generator h(std::size_t i) { return Generator{i}; }
  constexpr bool is_c() const { return index == 0; }

  bool operator==(const Generator&) const = default;
};

using GeneratorWord = std::vector<Generator>;

/// Points are numbered T1..Tn = 0..n-1 and B1..Bn = n..2n-1; mate[p] is the
/// point p is paired with.
using Matching = std::vector<std::uint32_t>;

/// Throws std::invalid_argument unless `mate` is a fixed-point-free
/// involution on 2n points.
void validate_perfect_matching(std::span<const std::uint32_t> mate, std::size_t n);

/// True iff no two pairs interleave in the circular order T1..Tn, Bn..B1.
/// Throws std::invalid_argument if `mate` is not a perfect matching.
bool is_noncrossing(std::span<const std::uint32_t> mate, std::size_t n);

class TLDiagram {
 public:
  /// Identity diagram on n strands with the given number of loops.
  static TLDiagram identity(std::size_t n, std::uint64_t loops = 0);

  /// Validates both the matching and planarity.
  TLDiagram(std::size_t n, Matching mate, std::uint64_t loops);

  std::size_t strands() const { return n_; }
  const Matching& matching() const { return mate_; }
  std::uint64_t loops() const { return loops_; }

  /// Same shape, loop count increased by k (multiplication by c^k).
  TLDiagram times_c(std::uint64_t k) const;
  /// Same shape, no loops.
  TLDiagram shape() const;

  bool operator==(const TLDiagram&) const = default;

 private:
  struct Unchecked {};
  TLDiagram(Unchecked, std::size_t n, Matching mate, std::uint64_t loops)
      : n_(n), mate_(std::move(mate)), loops_(loops) {}
  friend TLDiagram multiply(const TLDiagram&, const TLDiagram&);
  friend TLDiagram generator(std::size_t, Generator);

  std::size_t n_ = 0;
  Matching mate_;
  std::uint64_t loops_ = 0;
};

TLDiagram generator(std::size_t n, Generator g);

/// Stacks `top` over `bottom`. Throws std::invalid_argument on mismatched
/// strand counts and std::overflow_error if the loop count overflows.
TLDiagram multiply(const TLDiagram& top, const TLDiagram& bottom);

/// Left-to-right product; the empty word is the identity.
TLDiagram eval_word(std::size_t n, std::span<const Generator> word);

/// `n=3 loops=1 T1-T2 T3-B3 B1-B2`: pairs listed by their smaller point.
std::string render(const TLDiagram& d);

/// Tokens `c`, `h1`, `h12`, ... separated by whitespace or `.`; `1` is the
/// identity and contributes nothing. Throws
/// std::invalid_argument on a malformed token.
GeneratorWord parse_generator_word(std::string_view text);

/// Inverse of parse_generator_word with `.` separators; empty word is `1`.
std::string render_generator_word(std::span<const Generator> word);

/// Throws std::invalid_argument if some h_i has i >= n or n < 2.
void check_generator_word(std::size_t n, std::span<const Generator> word);

// Jones normal form.

/// h_[top, bottom] = h_top h_{top-1} ... h_bottom.
struct DescendingRun {
  std::size_t top = 0;
  std::size_t bottom = 0;
  bool operator==(const DescendingRun&) const = default;
};

/// c^c_exp h_[b1,a1] ... h_[bk,ak] with a1 < ... < ak and b1 < ... < bk.
struct JonesNF {
  std::uint64_t c_exp = 0;
  std::vector<DescendingRun> runs;
  bool operator==(const JonesNF&) const = default;
};

inline constexpr std::size_t kDefaultNormalFormBound = 10;

/// Every loop-free normal form on n strands. Throws std::invalid_argument if
/// n < 2 or n > max_n.
std::vector<JonesNF> enumerate_jnf_shapes(std::size_t n, std::size_t max_n = kDefaultNormalFormBound);

/// Expands the normal form into a generator word.
GeneratorWord to_generator_word(const JonesNF& nf);

/// The unique normal form of d. Throws std::invalid_argument if
/// d.strands() exceeds kDefaultNormalFormBound.
JonesNF jones_nf(const TLDiagram& d);

/// `c^2 h[1] h[3,2]`; `c` for exponent 1, `1` for the identity.
std::string render(const JonesNF& nf);

// K_3.

enum class K3Family { C, H11, H12, H21, H22 };

struct K3Class {
  K3Family family = K3Family::C;
  std::uint64_t exponent = 0;
  bool operator==(const K3Class&) const = default;
};

/// Which of c^k, c^k h1, c^k h1h2, c^k h2h1, c^k h2 the element is. Throws
/// std::invalid_argument unless d has 3 strands.
K3Class classify_k3(const TLDiagram& d);

std::string_view to_string(K3Family f);

}  // namespace kmon
