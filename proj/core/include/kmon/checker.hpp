#pragma once

// Deciding identities w = w' in K_3, plus the oracles that cross-check the
// fast decision procedure.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "kmon/diagram.hpp"
#include "kmon/models.hpp"
#include "kmon/words.hpp"

namespace kmon {

struct Identity {
  Word lhs;
  Word rhs;
  bool operator==(const Identity&) const = default;
};

/// A map from letters to elements of K_n, each given as a generator word.
using Substitution = std::map<Letter, GeneratorWord>;

namespace reason {

struct BothEmpty {
  bool operator==(const BothEmpty&) const = default;
};
struct AllConditionsMet {
  bool operator==(const AllConditionsMet&) const = default;
};
struct ContentMismatch {
  LetterSet lhs, rhs;
  bool operator==(const ContentMismatch&) const = default;
};
struct FowMismatch {
  Word lhs, rhs;
  bool operator==(const FowMismatch&) const = default;
};
struct LowMismatch {
  Word lhs, rhs;
  bool operator==(const LowMismatch&) const = default;
};
struct JumpMismatch {
  Jump jump;
  std::uint64_t lhs_count = 0, rhs_count = 0;
  bool operator==(const JumpMismatch&) const = default;
};
/// Deleting `removed` from both sides breaks one of the first-letter,
/// last-letter or factor-count conditions.
struct SubsetViolation {
  LetterSet removed;
  ConditionFailure failure;
  bool operator==(const SubsetViolation&) const = default;
};
/// Evaluating both sides in K_n under `substitution` gives different elements.
struct SemanticWitness {
  std::size_t strands = 0;
  Substitution substitution;
  bool operator==(const SemanticWitness&) const = default;
};

}  // namespace reason

using Reason = std::variant<reason::BothEmpty, reason::AllConditionsMet, reason::ContentMismatch,
                            reason::FowMismatch, reason::LowMismatch, reason::JumpMismatch,
                            reason::SubsetViolation, reason::SemanticWitness>;

struct Verdict {
  Reason reason;

  bool holds() const {
    return std::holds_alternative<reason::BothEmpty>(reason) ||
           std::holds_alternative<reason::AllConditionsMet>(reason);
  }
  bool operator==(const Verdict&) const = default;
};

/// Single-line record: `HOLDS`, `FAIL fow "xy" "yx"`, `FAIL jump (x,{y},z) 2 1`, ...
std::string serialize(const Verdict& v);

/// Human-readable sentence for the same verdict.
std::string describe(const Verdict& v);

/// Polynomial check via first/last occurrence words and jump multisets.
/// Stages run in order (emptiness, fow, low, jumps) and stop at the first
/// failure; a jump failure reports the least mismatched jump.
Verdict check_k3(const Identity& id);

/// Exponential reference check: equal contents, and the first-letter,
/// last-letter and factor-count conditions after deleting every proper subset
/// of the content (the empty set included). Subsets are tried in increasing
/// bitmask order over the sorted content. Throws std::length_error above 63
/// letters.
Verdict check_k3_subsets(const Identity& id);

/// Value of `w` in K_n when each letter is replaced by its image. Letters
/// missing from the substitution map to the identity.
TLDiagram evaluate(WordView w, const Substitution& s, std::size_t n);

struct RefuteOptions {
  std::size_t strands = 3;
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  /// Tried before any random substitution; does not count against the budget.
  std::optional<Substitution> first_trial;
};

/// Searches random substitutions (images are generator words of length 1-4,
/// each symbol uniform over c, h1, ..., h_{n-1}) for one separating the two
/// sides. A result proves the identity fails in K_n; no result proves nothing.
/// Throws std::invalid_argument if strands < 2.
std::optional<reason::SemanticWitness> refute_semantic(const Identity& id, const RefuteOptions& opts);

// Fuzzing.

/// The i-th fuzz alphabet letter: a..z, A..Z, 0..9, then non-ASCII scalars.
Letter fuzz_letter(std::size_t i);

/// A random identity over `letters` letters with lhs length in [1, maxlen].
/// Mixes independent pairs, near-miss edits, equal pairs and substitution
/// instances of xxyx = xyxx (which hold) and edits of those.
Identity random_identity(std::size_t letters, std::size_t maxlen, std::mt19937_64& rng);

struct FuzzOptions {
  std::size_t letters = 3;
  std::size_t maxlen = 6;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  /// Semantic search budget per identity, in K_3.
  std::size_t semantic_budget = 20;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

struct FuzzCounterexample {
  std::string kind;  // what disagreed
  Identity identity;
  std::string detail;
};

struct FuzzReport {
  std::size_t trials = 0;
  std::size_t holding = 0;
  std::size_t failing = 0;
  std::size_t agreements = 0;
  std::size_t refuted_failing = 0;  // failing identities with a K_3 witness found
  std::size_t deletion_checks = 0;
  std::vector<FuzzCounterexample> counterexamples;
  std::vector<Identity> holding_identities;  // first few, in trial order

  bool ok() const { return counterexamples.empty(); }
};

/// Each trial is seeded from (seed, trial index) alone, so the report does
/// not depend on the thread count. Throws std::invalid_argument if letters or
/// maxlen is 0.
FuzzReport fuzz(const FuzzOptions& opts, std::size_t keep_holding = 0);

std::string render(const FuzzReport& r);

}  // namespace kmon
