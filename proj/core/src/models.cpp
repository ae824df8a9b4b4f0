#include "kmon/models.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <utility>
#include <stdexcept>

namespace kmon {

namespace {

std::uint64_t checked_sum(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = 0;
  if (__builtin_add_overflow(a, b, &s)) throw std::overflow_error("S2 exponent overflow");
  return s;
}

std::uint64_t odd_power(std::uint64_t e) {  // 2e - 1
  if (e > std::numeric_limits<std::uint64_t>::max() / 2) throw std::overflow_error("c exponent overflow");
  return 2 * e - 1;
}

std::uint64_t even_power(std::uint64_t e) {  // 2e
  if (e > std::numeric_limits<std::uint64_t>::max() / 2) throw std::overflow_error("c exponent overflow");
  return 2 * e;
}

}  // namespace

S2Element::S2Element(S2Shape shape, std::uint64_t exponent) : shape_(shape), exponent_(exponent) {
  if (exponent == 0 && (shape == S2Shape::EF || shape == S2Shape::FE))
    throw std::invalid_argument("(ef)^0 and (fe)^0 are not elements of S2");
}

S2Element s2_mul(const S2Element& a, const S2Element& b) {
  using enum S2Shape;
  const std::uint64_t p = a.exponent();
  const std::uint64_t q = b.exponent();
  // One row per left shape, one column per right shape.
  switch (a.shape()) {
    case EF:
      switch (b.shape()) {
        case EF: return {EF, checked_sum(p, q)};
        case EFE: return {EFE, checked_sum(p, q)};
        case FEF: return {EF, checked_sum(p, q)};
        case FE: return {EFE, checked_sum(p, q) - 1};
      }
      break;
    case EFE:
      switch (b.shape()) {
        case EF: return {EF, checked_sum(p, q)};
        case EFE: return {EFE, checked_sum(p, q)};
        case FEF: return {EF, checked_sum(checked_sum(p, q), 1)};
        case FE: return {EFE, checked_sum(p, q)};
      }
      break;
    case FEF:
      switch (b.shape()) {
        case EF: return {FEF, checked_sum(p, q)};
        case EFE: return {FE, checked_sum(checked_sum(p, q), 1)};
        case FEF: return {FEF, checked_sum(p, q)};
        case FE: return {FE, checked_sum(p, q)};
      }
      break;
    case FE:
      switch (b.shape()) {
        case EF: return {FEF, checked_sum(p, q) - 1};
        case EFE: return {FE, checked_sum(p, q)};
        case FEF: return {FEF, checked_sum(p, q)};
        case FE: return {FE, checked_sum(p, q)};
      }
      break;
  }
  throw std::logic_error("unreachable S2 shape");
}

std::string render(const S2Element& a) {
  const std::string exp = "^" + std::to_string(a.exponent());
  switch (a.shape()) {
    case S2Shape::EF: return "(ef)" + exp;
    case S2Shape::EFE: return "(ef)" + exp + "e";
    case S2Shape::FEF: return "(fe)" + exp + "f";
    case S2Shape::FE: return "(fe)" + exp;
  }
  return {};
}

S2Element parse_s2(std::string_view text) {
  if (text == "e") return S2Element::e();
  if (text == "f") return S2Element::f();
  auto bad = [&] { return std::invalid_argument("bad S2 element '" + std::string(text) + "'"); };
  if (text.size() < 6 || text[4] != '^') throw bad();
  const std::string_view head = text.substr(0, 4);
  const bool ef = head == "(ef)";
  if (!ef && head != "(fe)") throw bad();

  std::uint64_t exponent = 0;
  const char* first = text.data() + 5;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, exponent);
  if (ec != std::errc{} || ptr == first) throw bad();
  const std::string_view tail(ptr, static_cast<std::size_t>(last - ptr));
  if (tail.empty()) return {ef ? S2Shape::EF : S2Shape::FE, exponent};
  if (ef && tail == "e") return {S2Shape::EFE, exponent};
  if (!ef && tail == "f") return {S2Shape::FEF, exponent};
  throw bad();
}

TLDiagram psi(const S2Element& a) {
  const auto h1 = Generator::h(1);
  const auto h2 = Generator::h(2);
  switch (a.shape()) {
    case S2Shape::EF: return eval_word(3, GeneratorWord{h1}).times_c(odd_power(a.exponent()));
    case S2Shape::EFE: return eval_word(3, GeneratorWord{h1, h2}).times_c(even_power(a.exponent()));
    case S2Shape::FEF: return eval_word(3, GeneratorWord{h2, h1}).times_c(even_power(a.exponent()));
    case S2Shape::FE: return eval_word(3, GeneratorWord{h2}).times_c(odd_power(a.exponent()));
  }
  throw std::logic_error("unreachable S2 shape");
}

ReesTriple rees_mul(const ReesTriple& a, const ReesTriple& b) {
  std::int64_t k = 0;
  if (__builtin_add_overflow(a.k, b.k, &k) ||
      __builtin_add_overflow(k, std::int64_t{a.column == b.row ? 1 : 0}, &k))
    throw std::overflow_error("Rees triple overflow");
  return {a.row, k, b.column};
}

std::string render(const ReesTriple& t) {
  return "(" + std::to_string(t.row) + "," + std::to_string(t.k) + "," + std::to_string(t.column) + ")";
}

ReesTriple parse_rees(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("bad Rees triple '" + std::string(text) + "'"); };
  if (text.size() < 7 || text.front() != '(' || text.back() != ')') throw bad();
  const std::string_view body = text.substr(1, text.size() - 2);
  const auto c1 = body.find(',');
  const auto c2 = body.rfind(',');
  if (c1 == std::string_view::npos || c1 == c2) throw bad();

  auto index = [&](std::string_view s) {
    if (s != "1" && s != "2") throw bad();
    return s == "1" ? 1 : 2;
  };
  ReesTriple t;
  t.row = index(body.substr(0, c1));
  t.column = index(body.substr(c2 + 1));
  const std::string_view middle = body.substr(c1 + 1, c2 - c1 - 1);
  const auto [ptr, ec] = std::from_chars(middle.data(), middle.data() + middle.size(), t.k);
  if (ec != std::errc{} || ptr != middle.data() + middle.size() || middle.empty()) throw bad();
  return t;
}

ReesTriple xi(const TLDiagram& d) {
  const K3Class cls = classify_k3(d);
  if (cls.exponent > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("c exponent does not fit a Rees triple");
  const auto k = static_cast<std::int64_t>(cls.exponent);
  switch (cls.family) {
    case K3Family::C: throw std::domain_error("xi is defined on H only; got a power of c");
    case K3Family::H11: return {1, k, 1};
    case K3Family::H12: return {1, k, 2};
    case K3Family::H21: return {2, k, 1};
    case K3Family::H22: return {2, k, 2};
  }
  throw std::logic_error("unreachable K3 family");
}

std::optional<ConditionFailure> find_condition_failure(WordView u, WordView v) {
  using Kind = ConditionFailure::Kind;
  if (u.empty() || v.empty()) throw std::invalid_argument("first/last/factor check needs nonempty words");
  if (u.front() != v.front()) return ConditionFailure{Kind::First, u.front(), v.front()};
  if (u.back() != v.back()) return ConditionFailure{Kind::Last, u.back(), v.back()};

  // Only factors over the union of contents can have nonzero counts.
  std::map<std::pair<Letter, Letter>, std::pair<std::uint64_t, std::uint64_t>> counts;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) ++counts[{u[i], u[i + 1]}].first;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) ++counts[{v[i], v[i + 1]}].second;
  for (const auto& [factor, n] : counts)
    if (n.first != n.second) return ConditionFailure{Kind::Factor, factor.first, factor.second, n.first, n.second};
  return std::nullopt;
}

bool check_abc(WordView u, WordView v) { return !find_condition_failure(u, v).has_value(); }

}  // namespace kmon
