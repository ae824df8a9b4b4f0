#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "kmon/checker.hpp"
#include "kmon/diagram.hpp"

namespace kmon::cli {

namespace {

constexpr std::size_t kMaxWordLength = 100'000'000;

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string multiset_lines(const JumpMultiset& m, std::string_view empty_gap) {
  std::string out;
  for (const auto& [jump, n] : m) out += render_jump(jump, empty_gap) + ":" + std::to_string(n) + "\n";
  return out;
}

std::string trace_table(WordView w, std::string_view empty_gap) {
  const auto rows = jump_trace(w);
  const std::size_t num_width = std::max<std::size_t>(1, std::to_string(w.size()).size());

  std::ostringstream out;
  out << std::setw(static_cast<int>(num_width)) << "i" << " | v[i]";
  std::vector<std::size_t> lop_width;
  for (Letter a : content(w)) {
    const std::string head = "lop(" + to_utf8(a) + ")";
    lop_width.push_back(std::max(head.size(), num_width));
    out << " | " << std::setw(static_cast<int>(lop_width.back())) << head;
  }
  out << " | jumps added\n";

  for (const auto& row : rows) {
    out << std::setw(static_cast<int>(num_width)) << row.position << " | " << std::left << std::setw(4)
        << to_utf8(row.letter) << std::right;
    for (std::size_t c = 0; c < row.lop.size(); ++c)
      out << " | " << std::setw(static_cast<int>(lop_width[c])) << row.lop[c].second;
    std::vector<std::string> added;
    for (const auto& j : row.added) added.push_back(render_jump(j, empty_gap));
    out << " | " << (added.empty() ? std::string("-") : join(added, ", ")) << '\n';
  }
  return out.str();
}

struct Options {
  bool human = false;

  std::string lhs, rhs;
  std::string method = "poly";
  std::size_t strands = 3;
  std::size_t budget = 1000;
  std::uint64_t seed = 0;

  std::string word;
  bool trace = false;

  std::vector<std::string> generators;

  std::size_t letters = 3;
  std::size_t maxlen = 6;
  std::size_t trials = 1000;
  std::size_t threads = 0;
  std::size_t fuzz_budget = 20;
};

int cmd_check(const Options& o, std::ostream& out) {
  const Identity id{parse_word(o.lhs), parse_word(o.rhs)};
  if (o.method == "semantic") {
    RefuteOptions ropts;
    ropts.strands = o.strands;
    ropts.budget = o.budget;
    ropts.seed = o.seed;
    const auto witness = refute_semantic(id, ropts);
    if (!witness) {
      out << (o.human ? "unknown: no separating substitution found in K" + std::to_string(o.strands) + " after " +
                            std::to_string(o.budget) + " trials"
                      : std::string("UNKNOWN"))
          << '\n';
      return kUnknown;
    }
    const Verdict v{*witness};
    out << (o.human ? describe(v) : serialize(v)) << '\n';
    if (o.human && o.strands <= kDefaultNormalFormBound) {
      out << "  lhs = " << render(jones_nf(evaluate(id.lhs, witness->substitution, o.strands))) << '\n'
          << "  rhs = " << render(jones_nf(evaluate(id.rhs, witness->substitution, o.strands))) << '\n';
    }
    return kFails;
  }
  const Verdict v = o.method == "subsets" ? check_k3_subsets(id) : check_k3(id);
  out << (o.human ? describe(v) : serialize(v)) << '\n';
  return v.holds() ? kHolds : kFails;
}

int cmd_words(const std::string& which, const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word);
  const std::string_view empty_gap = o.human ? "∅" : "{}";
  if (which == "fow") out << render_word(fow(w)) << '\n';
  else if (which == "low") out << render_word(low(w)) << '\n';
  else if (o.trace) out << trace_table(w, empty_gap);
  else out << multiset_lines(jumps(w), empty_gap);
  return 0;
}

GeneratorWord checked_generators(const Options& o) {
  const GeneratorWord g = parse_generator_word(join(o.generators, " "));
  check_generator_word(o.strands, g);
  return g;
}

int cmd_mul(const Options& o, std::ostream& out) {
  out << render(eval_word(o.strands, checked_generators(o))) << '\n';
  return 0;
}

int cmd_nf(const Options& o, std::ostream& out) {
  const GeneratorWord g = checked_generators(o);
  if (o.strands > kDefaultNormalFormBound)
    throw std::invalid_argument("nf supports at most " + std::to_string(kDefaultNormalFormBound) + " strands");
  out << render(jones_nf(eval_word(o.strands, g))) << '\n';
  return 0;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  FuzzOptions f;
  f.letters = o.letters;
  f.maxlen = o.maxlen;
  f.trials = o.trials;
  f.seed = o.seed;
  f.threads = o.threads;
  f.semantic_budget = o.fuzz_budget;
  const FuzzReport r = fuzz(f);
  out << render(r);
  return r.ok() ? 0 : 1;
}

}  // namespace

Word parse_word(std::string_view text) {
  if (text == "-") return {};
  if (text.empty()) throw std::invalid_argument("empty word argument; write '-' for the empty word");
  Word out;
  std::size_t i = 0;
  bool after_letter = false;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isalnum(static_cast<unsigned char>(ch))) {
      out.push_back(static_cast<Letter>(static_cast<unsigned char>(ch)));
      after_letter = true;
      ++i;
      continue;
    }
    if (ch != '^') throw std::invalid_argument("bad character '" + std::string(1, ch) + "' in word '" +
                                               std::string(text) + "'");
    if (!after_letter) throw std::invalid_argument("'^' must follow a letter in '" + std::string(text) + "'");

    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    std::size_t count = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i + 1, text.data() + j, count);
    if (j == i + 1 || ec != std::errc{} || ptr != text.data() + j)
      throw std::invalid_argument("'^' must be followed by a decimal exponent in '" + std::string(text) + "'");
    if (count > kMaxWordLength) throw std::invalid_argument("exponent too large");

    const Letter base = out.back();
    out.pop_back();
    out.append(count, base);
    if (out.size() > kMaxWordLength) throw std::invalid_argument("word too long");
    after_letter = false;
    i = j;
  }
  return out;
}

std::string render_word(WordView w) { return w.empty() ? "-" : to_utf8(w); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identity checking in the Kauffman monoid K3 and Temperley-Lieb diagram arithmetic", "kmon"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--human", o.human, "Human-readable output instead of one record per line");

  auto* check = app.add_subcommand("check", "Decide whether the identity LHS = RHS holds in K3");
  check->add_option("lhs", o.lhs, "Left-hand word, e.g. x^2yx ('-' is the empty word)")->required();
  check->add_option("rhs", o.rhs, "Right-hand word")->required();
  check->add_option("--method", o.method, "poly, subsets or semantic")
      ->check(CLI::IsMember({"poly", "subsets", "semantic"}));
  check->add_option("--n", o.strands, "Strand count for --method semantic")->check(CLI::Range(2, 1 << 20));
  check->add_option("--budget", o.budget, "Random substitutions to try for --method semantic");
  check->add_option("--seed", o.seed, "Seed for --method semantic");

  std::vector<CLI::App*> word_cmds;
  for (const char* name : {"fow", "low", "jumps"}) {
    auto* sub = app.add_subcommand(name, std::string(name == std::string_view("fow")   ? "First occurrence word"
                                                     : name == std::string_view("low") ? "Last occurrence word"
                                                                                       : "Jump multiset"));
    sub->add_option("word", o.word, "Word, e.g. x^3yxyz^4xyz")->required();
    if (name == std::string_view("jumps")) sub->add_flag("--trace", o.trace, "Print the scan step by step");
    word_cmds.push_back(sub);
  }

  auto* mul = app.add_subcommand("mul", "Evaluate a generator word as a diagram");
  auto* nf = app.add_subcommand("nf", "Jones normal form of a generator word");
  for (auto* sub : {mul, nf}) {
    sub->add_option("--n", o.strands, "Strand count")->required()->check(CLI::Range(2, 1 << 20));
    sub->add_option("generators", o.generators, "Generator word, e.g. h1.h2.c")->required();
  }

  auto* fz = app.add_subcommand("fuzz", "Cross-check the polynomial checker against the oracles");
  fz->add_option("--letters", o.letters, "Alphabet size")->check(CLI::Range(1, 1000));
  fz->add_option("--maxlen", o.maxlen, "Maximum word length")->check(CLI::Range(1, 1000));
  fz->add_option("--trials", o.trials, "Number of random identities")->check(CLI::PositiveNumber);
  fz->add_option("--seed", o.seed, "Seed");
  fz->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
  fz->add_option("--budget", o.fuzz_budget, "Semantic search budget per identity");

  std::vector<const char*> argv{"kmon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "kmon: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    for (auto* sub : word_cmds)
      if (sub->parsed()) return cmd_words(sub->get_name(), o, out);
    if (mul->parsed()) return cmd_mul(o, out);
    if (nf->parsed()) return cmd_nf(o, out);
    if (fz->parsed()) return cmd_fuzz(o, out);
  } catch (const std::invalid_argument& e) {
    err << "kmon: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace kmon::cli
