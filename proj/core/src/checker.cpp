#include "kmon/checker.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace kmon {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string quoted(WordView w) { return "\"" + to_utf8(w) + "\""; }

std::string render_failure(const ConditionFailure& f) {
  switch (f.kind) {
    case ConditionFailure::Kind::First: return "first " + to_utf8(f.lhs) + " " + to_utf8(f.rhs);
    case ConditionFailure::Kind::Last: return "last " + to_utf8(f.lhs) + " " + to_utf8(f.rhs);
    case ConditionFailure::Kind::Factor:
      return "factor " + to_utf8(f.lhs) + to_utf8(f.rhs) + " " + std::to_string(f.lhs_count) + " " +
             std::to_string(f.rhs_count);
  }
  return {};
}

std::string render_substitution(const Substitution& s) {
  std::string out;
  for (const auto& [letter, image] : s) {
    if (!out.empty()) out += ' ';
    out += to_utf8(letter) + "=" + render_generator_word(image);
  }
  return out;
}

}  // namespace

std::string serialize(const Verdict& v) {
  return std::visit(
      Overloaded{
          [](const reason::BothEmpty&) -> std::string { return "HOLDS"; },
          [](const reason::AllConditionsMet&) -> std::string { return "HOLDS"; },
          [](const reason::ContentMismatch& r) {
            return "FAIL content " + render_set(r.lhs) + " " + render_set(r.rhs);
          },
          [](const reason::FowMismatch& r) { return "FAIL fow " + quoted(r.lhs) + " " + quoted(r.rhs); },
          [](const reason::LowMismatch& r) { return "FAIL low " + quoted(r.lhs) + " " + quoted(r.rhs); },
          [](const reason::JumpMismatch& r) {
            return "FAIL jump " + render_jump(r.jump) + " " + std::to_string(r.lhs_count) + " " +
                   std::to_string(r.rhs_count);
          },
          [](const reason::SubsetViolation& r) {
            return "FAIL subset " + render_set(r.removed) + " " + render_failure(r.failure);
          },
          [](const reason::SemanticWitness& r) {
            return "FAIL witness n=" + std::to_string(r.strands) + " " + render_substitution(r.substitution);
          },
      },
      v.reason);
}

std::string describe(const Verdict& v) {
  return std::visit(
      Overloaded{
          [](const reason::BothEmpty&) -> std::string { return "holds in K3: both sides are empty"; },
          [](const reason::AllConditionsMet&) -> std::string { return "holds in K3"; },
          [](const reason::ContentMismatch& r) {
            return "fails in K3: contents differ, " + render_set(r.lhs) + " vs " + render_set(r.rhs);
          },
          [](const reason::FowMismatch& r) {
            return "fails in K3: first occurrence words differ, " + quoted(r.lhs) + " vs " + quoted(r.rhs);
          },
          [](const reason::LowMismatch& r) {
            return "fails in K3: last occurrence words differ, " + quoted(r.lhs) + " vs " + quoted(r.rhs);
          },
          [](const reason::JumpMismatch& r) {
            return "fails in K3: jump " + render_jump(r.jump, "∅") + " occurs " + std::to_string(r.lhs_count) +
                   " time(s) on the left and " + std::to_string(r.rhs_count) + " on the right";
          },
          [](const reason::SubsetViolation& r) {
            return "fails in K3: after deleting " + render_set(r.removed) + ", " + render_failure(r.failure);
          },
          [](const reason::SemanticWitness& r) {
            return "fails in K" + std::to_string(r.strands) + ": sides differ under " +
                   render_substitution(r.substitution);
          },
      },
      v.reason);
}

Verdict check_k3(const Identity& id) {
  const auto& [lhs, rhs] = id;
  if (lhs.empty() && rhs.empty()) return {reason::BothEmpty{}};
  if (lhs.empty() || rhs.empty()) return {reason::ContentMismatch{content(lhs), content(rhs)}};

  if (Word a = fow(lhs), b = fow(rhs); a != b) return {reason::FowMismatch{std::move(a), std::move(b)}};
  if (Word a = low(lhs), b = low(rhs); a != b) return {reason::LowMismatch{std::move(a), std::move(b)}};
  if (auto diff = first_difference(jumps(lhs), jumps(rhs)))
    return {reason::JumpMismatch{std::move(diff->jump), diff->lhs_count, diff->rhs_count}};
  return {reason::AllConditionsMet{}};
}

Verdict check_k3_subsets(const Identity& id) {
  LetterSet left = content(id.lhs);
  LetterSet right = content(id.rhs);
  if (left != right) return {reason::ContentMismatch{std::move(left), std::move(right)}};
  if (left.empty()) return {reason::BothEmpty{}};

  const std::vector<Letter> letters(left.begin(), left.end());
  if (letters.size() > 63) throw std::length_error("subset check supports at most 63 letters");
  const std::uint64_t full = (std::uint64_t{1} << letters.size()) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    LetterSet removed;
    for (std::size_t i = 0; i < letters.size(); ++i)
      if (mask >> i & 1) removed.insert(letters[i]);
    const Word u = delete_letters(id.lhs, removed);
    const Word v = delete_letters(id.rhs, removed);
    if (auto failure = find_condition_failure(u, v))
      return {reason::SubsetViolation{std::move(removed), *failure}};
  }
  return {reason::AllConditionsMet{}};
}

TLDiagram evaluate(WordView w, const Substitution& s, std::size_t n) {
  std::map<Letter, TLDiagram> images;
  for (const auto& [letter, word] : s) images.emplace(letter, eval_word(n, word));
  TLDiagram acc = TLDiagram::identity(n);
  for (Letter a : w)
    if (auto it = images.find(a); it != images.end()) acc = multiply(acc, it->second);
  return acc;
}

std::optional<reason::SemanticWitness> refute_semantic(const Identity& id, const RefuteOptions& opts) {
  if (opts.strands < 2) throw std::invalid_argument("semantic refutation needs at least 2 strands");
  const std::size_t n = opts.strands;
  LetterSet letters = content(id.lhs);
  letters.merge(content(id.rhs));

  auto separates = [&](const Substitution& s) {
    return evaluate(id.lhs, s, n) != evaluate(id.rhs, s, n);
  };
  if (opts.first_trial && separates(*opts.first_trial))
    return reason::SemanticWitness{n, *opts.first_trial};

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> length(1, 4);
  std::uniform_int_distribution<std::size_t> symbol(0, n - 1);  // 0 is c
  for (std::size_t trial = 0; trial < opts.budget; ++trial) {
    Substitution s;
    for (Letter a : letters) {
      GeneratorWord image(length(rng));
      for (auto& g : image) g = Generator{symbol(rng)};
      s.emplace(a, std::move(image));
    }
    if (separates(s)) return reason::SemanticWitness{n, std::move(s)};
  }
  return std::nullopt;
}

Letter fuzz_letter(std::size_t i) {
  if (i < 26) return static_cast<Letter>(U'a' + i);
  if (i < 52) return static_cast<Letter>(U'A' + (i - 26));
  if (i < 62) return static_cast<Letter>(U'0' + (i - 52));
  return static_cast<Letter>(0x100 + (i - 62));
}

namespace {

Word random_word(std::size_t letters, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, letters - 1);
  Word w(length, U'\0');
  for (auto& a : w) a = fuzz_letter(pick(rng));
  return w;
}

// One random transposition, duplication, deletion or substitution.
void edit(Word& w, std::size_t letters, std::size_t maxlen, std::mt19937_64& rng) {
  if (w.empty()) {
    w = random_word(letters, 1, rng);
    return;
  }
  std::uniform_int_distribution<std::size_t> pos(0, w.size() - 1);
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: {
      const std::size_t i = pos(rng);
      const std::size_t j = pos(rng);
      std::swap(w[i], w[j]);
      break;
    }
    case 1:
      if (w.size() < maxlen) {
        const std::size_t i = pos(rng);
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), w[i]);
      }
      break;
    case 2:
      if (w.size() > 1) w.erase(pos(rng), 1);
      break;
    default: w[pos(rng)] = fuzz_letter(std::uniform_int_distribution<std::size_t>(0, letters - 1)(rng)); break;
  }
}

// p p q p and p q p p for random p, q.
std::optional<Identity> instance_of_known(std::size_t letters, std::size_t maxlen, std::mt19937_64& rng) {
  if (maxlen < 4) return std::nullopt;
  const std::size_t p_len = std::uniform_int_distribution<std::size_t>(1, (maxlen - 1) / 3)(rng);
  const std::size_t q_len = std::uniform_int_distribution<std::size_t>(1, maxlen - 3 * p_len)(rng);
  const Word p = random_word(letters, p_len, rng);
  const Word q = random_word(letters, q_len, rng);
  return Identity{p + p + q + p, p + q + p + p};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Identity random_identity(std::size_t letters, std::size_t maxlen, std::mt19937_64& rng) {
  if (letters == 0 || maxlen == 0) throw std::invalid_argument("need at least one letter and length 1");
  const std::size_t len = std::uniform_int_distribution<std::size_t>(1, maxlen)(rng);
  const int mode = std::uniform_int_distribution<int>(0, 4)(rng);
  auto near_miss = [&](Word w) {
    Word v = w;
    const int edits = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int i = 0; i < edits; ++i) edit(v, letters, maxlen, rng);
    return Identity{std::move(w), std::move(v)};
  };
  switch (mode) {
    case 0: return {random_word(letters, len, rng), random_word(letters, len, rng)};
    case 1: return near_miss(random_word(letters, len, rng));
    case 2: {
      Word w = random_word(letters, len, rng);
      return {w, w};
    }
    case 3:
      if (auto known = instance_of_known(letters, maxlen, rng)) return *known;
      return near_miss(random_word(letters, len, rng));
    default:
      if (auto known = instance_of_known(letters, maxlen, rng)) {
        edit(known->rhs, letters, maxlen, rng);
        return *known;
      }
      return near_miss(random_word(letters, len, rng));
  }
}

namespace {

struct TrialOutcome {
  Identity identity;
  bool holds = false;
  bool refuted = false;
  bool deletion_checked = false;
  std::vector<FuzzCounterexample> problems;
};

TrialOutcome run_trial(const FuzzOptions& opts, std::size_t index) {
  std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(index)));
  TrialOutcome out;
  out.identity = random_identity(opts.letters, opts.maxlen, rng);
  const Identity& id = out.identity;
  const Identity flipped{id.rhs, id.lhs};

  const Verdict fast = check_k3(id);
  const Verdict oracle = check_k3_subsets(id);
  out.holds = fast.holds();
  if (fast.holds() != oracle.holds())
    out.problems.push_back({"oracle", id, serialize(fast) + " vs " + serialize(oracle)});
  if (check_k3(flipped).holds() != fast.holds())
    out.problems.push_back({"symmetry", id, serialize(fast)});

  RefuteOptions ropts;
  ropts.strands = 3;
  ropts.budget = opts.semantic_budget;
  ropts.seed = rng();
  const auto witness = refute_semantic(id, ropts);
  out.refuted = witness.has_value();
  if (fast.holds() && witness)
    out.problems.push_back({"semantic", id, serialize(Verdict{*witness})});

  if (fast.holds()) {
    LetterSet removed;
    for (Letter a : content(id.lhs))
      if (rng() & 1) removed.insert(a);
    const Identity reduced{delete_letters(id.lhs, removed), delete_letters(id.rhs, removed)};
    out.deletion_checked = true;
    if (const Verdict v = check_k3(reduced); !v.holds())
      out.problems.push_back({"deletion", id, "removing " + render_set(removed) + ": " + serialize(v)});
  }
  return out;
}

}  // namespace

FuzzReport fuzz(const FuzzOptions& opts, std::size_t keep_holding) {
  if (opts.letters == 0 || opts.maxlen == 0) throw std::invalid_argument("fuzz needs letters >= 1 and maxlen >= 1");

  std::vector<TrialOutcome> outcomes(opts.trials);
  std::size_t threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, opts.trials));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < opts.trials; i += threads) outcomes[i] = run_trial(opts, i);
      });
  }

  FuzzReport report;
  report.trials = opts.trials;
  for (auto& o : outcomes) {
    (o.holds ? report.holding : report.failing) += 1;
    if (o.problems.empty()) ++report.agreements;
    if (!o.holds && o.refuted) ++report.refuted_failing;
    if (o.deletion_checked) ++report.deletion_checks;
    if (o.holds && report.holding_identities.size() < keep_holding) report.holding_identities.push_back(o.identity);
    for (auto& p : o.problems) report.counterexamples.push_back(std::move(p));
  }
  return report;
}

std::string render(const FuzzReport& r) {
  std::ostringstream out;
  out << "trials " << r.trials << '\n'
      << "holds " << r.holding << '\n'
      << "fails " << r.failing << '\n'
      << "agreements " << r.agreements << '\n'
      << "disagreements " << r.counterexamples.size() << '\n'
      << "refuted_in_k3 " << r.refuted_failing << '/' << r.failing << '\n'
      << "deletion_checks " << r.deletion_checks << '\n';
  for (const auto& c : r.counterexamples)
    out << "COUNTEREXAMPLE " << c.kind << ' ' << quoted(c.identity.lhs) << ' ' << quoted(c.identity.rhs) << ' '
        << c.detail << '\n';
  return out.str();
}

}  // namespace kmon
