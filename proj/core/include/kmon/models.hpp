#pragma once

// Validation models for K_3: the free product S2 = <e, f | e^2 = e, f^2 = f>
// with its embedding psi into K_3, and the Rees matrix semigroup M(Z; I_2)
// with the embedding xi of the ideal H = K_3 \ {c^k}.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "kmon/diagram.hpp"
#include "kmon/words.hpp"

namespace kmon {

/// The four alternating-product shapes of S2.
enum class S2Shape {
  EF,   // (ef)^l, l >= 1
  EFE,  // (ef)^m e, m >= 0
  FEF,  // (fe)^n f, n >= 0
  FE,   // (fe)^r, r >= 1
};

class S2Element {
 public:
  /// Throws std::invalid_argument for (ef)^0 or (fe)^0.
  S2Element(S2Shape shape, std::uint64_t exponent);

  static S2Element e() { return {S2Shape::EFE, 0}; }
  static S2Element f() { return {S2Shape::FEF, 0}; }

  S2Shape shape() const { return shape_; }
  std::uint64_t exponent() const { return exponent_; }

  bool operator==(const S2Element&) const = default;

 private:
  S2Shape shape_;
  std::uint64_t exponent_;
};

S2Element s2_mul(const S2Element& a, const S2Element& b);

/// `(ef)^3`, `(ef)^2e`, `(fe)^0f`, `(fe)^1`.
std::string render(const S2Element& a);
/// Accepts the rendered forms plus bare `e` and `f`.
S2Element parse_s2(std::string_view text);

/// The image of a in K_3.
TLDiagram psi(const S2Element& a);

struct ReesTriple {
  int row = 1;  // eta, in {1, 2}
  std::int64_t k = 0;
  int column = 1;  // lambda, in {1, 2}
  bool operator==(const ReesTriple&) const = default;
};

/// (eta, k, lambda)(iota, l, mu) = (eta, k + [lambda == iota] + l, mu).
ReesTriple rees_mul(const ReesTriple& a, const ReesTriple& b);

std::string render(const ReesTriple& t);
ReesTriple parse_rees(std::string_view text);

/// Image of an element of H. Throws std::domain_error for a pure power of c
/// and std::invalid_argument unless d has 3 strands.
ReesTriple xi(const TLDiagram& d);

/// True iff two nonempty words have the same first letter, the same last
/// letter and the same number of occurrences of every two-letter factor. Throws
/// std::invalid_argument if either word is empty.
bool check_abc(WordView u, WordView v);

/// Why check_abc failed: first letters differ (lhs/rhs are those letters),
/// last letters differ, or the two-letter factor lhs.rhs occurs a different
/// number of times (the least such factor).
struct ConditionFailure {
  enum class Kind { First, Last, Factor };
  Kind kind = Kind::First;
  Letter lhs{};
  Letter rhs{};
  std::uint64_t lhs_count = 0;
  std::uint64_t rhs_count = 0;
  bool operator==(const ConditionFailure&) const = default;
};

/// Same contract as check_abc, returning the failure instead of a bool.
std::optional<ConditionFailure> find_condition_failure(WordView u, WordView v);

}  // namespace kmon
