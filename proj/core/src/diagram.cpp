#include "kmon/diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

namespace kmon {

namespace {

std::uint64_t add_loops(std::uint64_t a, std::uint64_t b) {
  std::uint64_t sum = 0;
  if (__builtin_add_overflow(a, b, &sum)) throw std::overflow_error("loop counter overflow");
  return sum;
}

// Position of a point in the circular order T1..Tn, Bn..B1.
std::size_t circular_position(std::size_t p, std::size_t n) { return p < n ? p : 3 * n - 1 - p; }

}  // namespace

void validate_perfect_matching(std::span<const std::uint32_t> mate, std::size_t n) {
  if (mate.size() != 2 * n) throw std::invalid_argument("matching must pair exactly 2n points");
  for (std::size_t p = 0; p < mate.size(); ++p) {
    if (mate[p] >= mate.size()) throw std::invalid_argument("matching refers to a point out of range");
    if (mate[p] == p) throw std::invalid_argument("matching has a fixed point");
    if (mate[mate[p]] != p) throw std::invalid_argument("matching is not an involution");
  }
}

bool is_noncrossing(std::span<const std::uint32_t> mate, std::size_t n) {
  validate_perfect_matching(mate, n);
  std::vector<std::size_t> at(2 * n);
  for (std::size_t p = 0; p < 2 * n; ++p) at[circular_position(p, n)] = p;

  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const std::size_t partner = circular_position(mate[at[i]], n);
    if (partner > i) {
      open.push_back(i);
    } else {
      if (open.empty() || open.back() != partner) return false;
      open.pop_back();
    }
  }
  return true;
}

TLDiagram TLDiagram::identity(std::size_t n, std::uint64_t loops) {
  if (n < 2) throw std::invalid_argument("a diagram needs at least 2 strands");
  Matching mate(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    mate[j] = static_cast<std::uint32_t>(n + j);
    mate[n + j] = static_cast<std::uint32_t>(j);
  }
  return TLDiagram(Unchecked{}, n, std::move(mate), loops);
}

TLDiagram::TLDiagram(std::size_t n, Matching mate, std::uint64_t loops)
    : n_(n), mate_(std::move(mate)), loops_(loops) {
  if (n < 2) throw std::invalid_argument("a diagram needs at least 2 strands");
  if (!is_noncrossing(mate_, n_)) throw std::invalid_argument("matching is not planar");
}

TLDiagram TLDiagram::times_c(std::uint64_t k) const {
  return TLDiagram(Unchecked{}, n_, mate_, add_loops(loops_, k));
}

TLDiagram TLDiagram::shape() const { return TLDiagram(Unchecked{}, n_, mate_, 0); }

TLDiagram generator(std::size_t n, Generator g) {
  if (n < 2) throw std::invalid_argument("a diagram needs at least 2 strands");
  if (g.is_c()) return TLDiagram::identity(n, 1);
  if (g.index >= n) throw std::invalid_argument("generator index out of range");

  Matching mate = TLDiagram::identity(n).matching();
  const auto i = static_cast<std::uint32_t>(g.index - 1);
  const auto m = static_cast<std::uint32_t>(n);
  mate[i] = i + 1;
  mate[i + 1] = i;
  mate[m + i] = m + i + 1;
  mate[m + i + 1] = m + i;
  return TLDiagram(TLDiagram::Unchecked{}, n, std::move(mate), 0);
}

TLDiagram multiply(const TLDiagram& top, const TLDiagram& bottom) {
  if (top.n_ != bottom.n_) throw std::invalid_argument("cannot multiply diagrams with different strand counts");
  const auto n = static_cast<std::uint32_t>(top.n_);
  const auto& up = top.mate_;
  const auto& down = bottom.mate_;

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  Matching mate(2 * n, kUnset);
  std::vector<bool> middle_seen(n, false);

  // Follows a strand entering `top` at point p (in_top) or `bottom` at point p
  // until it leaves through the outer boundary. Middle points are the bottom
  // row of `top`, identified with the top row of `bottom`.
  auto follow = [&](bool in_top, std::uint32_t p) {
    for (;;) {
      if (in_top) {
        const std::uint32_t q = up[p];
        if (q < n) return q;
        middle_seen[q - n] = true;
        p = q - n;
        in_top = false;
      } else {
        const std::uint32_t q = down[p];
        if (q >= n) return q;
        middle_seen[q] = true;
        p = n + q;
        in_top = true;
      }
    }
  };

  for (std::uint32_t p = 0; p < 2 * n; ++p) {
    if (mate[p] != kUnset) continue;
    const std::uint32_t q = p < n ? follow(true, p) : follow(false, p);
    mate[p] = q;
    mate[q] = p;
  }

  // Whatever is left in the middle closes up into loops.
  std::uint64_t closed = 0;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (middle_seen[start]) continue;
    ++closed;
    std::uint32_t cur = start;
    do {
      middle_seen[cur] = true;
      const std::uint32_t q = down[cur];  // another top point of `bottom`
      middle_seen[q] = true;
      cur = up[n + q] - n;  // another bottom point of `top`
    } while (cur != start);
  }

  const std::uint64_t loops = add_loops(add_loops(top.loops_, bottom.loops_), closed);
  return TLDiagram(TLDiagram::Unchecked{}, top.n_, std::move(mate), loops);
}

void check_generator_word(std::size_t n, std::span<const Generator> word) {
  if (n < 2) throw std::invalid_argument("a diagram needs at least 2 strands");
  for (const Generator g : word)
    if (g.index >= n)
      throw std::invalid_argument("h" + std::to_string(g.index) + " does not exist in K_" + std::to_string(n));
}

TLDiagram eval_word(std::size_t n, std::span<const Generator> word) {
  check_generator_word(n, word);
  TLDiagram acc = TLDiagram::identity(n);
  for (const Generator g : word) acc = multiply(acc, generator(n, g));
  return acc;
}

std::string render(const TLDiagram& d) {
  const std::size_t n = d.strands();
  auto name = [n](std::size_t p) {
    return (p < n ? "T" : "B") + std::to_string(p < n ? p + 1 : p - n + 1);
  };
  std::string out = "n=" + std::to_string(n) + " loops=" + std::to_string(d.loops());
  for (std::size_t p = 0; p < 2 * n; ++p) {
    const std::size_t q = d.matching()[p];
    if (p < q) out += " " + name(p) + "-" + name(q);
  }
  return out;
}

GeneratorWord parse_generator_word(std::string_view text) {
  GeneratorWord out;
  std::size_t i = 0;
  auto separator = [](char ch) { return ch == '.' || std::isspace(static_cast<unsigned char>(ch)); };
  while (i < text.size()) {
    if (separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !separator(text[j])) ++j;
    const std::string_view token = text.substr(i, j - i);
    i = j;

    if (token == "1") continue;
    if (token == "c") {
      out.push_back(Generator::c());
      continue;
    }
    std::size_t index = 0;
    const bool digits = token.size() >= 2 && token[0] == 'h' &&
                        std::all_of(token.begin() + 1, token.end(),
                                    [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    if (!digits) throw std::invalid_argument("bad generator token '" + std::string(token) + "'");
    const auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), index);
    if (ec != std::errc{} || index == 0)
      throw std::invalid_argument("bad generator token '" + std::string(token) + "'");
    out.push_back(Generator::h(index));
  }
  return out;
}

std::string render_generator_word(std::span<const Generator> word) {
  if (word.empty()) return "1";
  std::string out;
  for (const Generator g : word) {
    if (!out.empty()) out += '.';
    out += g.is_c() ? std::string("c") : "h" + std::to_string(g.index);
  }
  return out;
}

namespace {

void extend_shapes(std::size_t n, JonesNF& cur, std::vector<JonesNF>& out) {
  out.push_back(cur);
  const std::size_t min_bottom = cur.runs.empty() ? 1 : cur.runs.back().bottom + 1;
  const std::size_t min_top = cur.runs.empty() ? 1 : cur.runs.back().top + 1;
  for (std::size_t top = min_top; top < n; ++top) {
    for (std::size_t bottom = min_bottom; bottom <= top; ++bottom) {
      cur.runs.push_back({top, bottom});
      extend_shapes(n, cur, out);
      cur.runs.pop_back();
    }
  }
}

std::uint64_t catalan(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

struct ShapeTable {
  std::map<Matching, JonesNF> by_matching;
};

const ShapeTable& shape_table(std::size_t n) {
  static std::array<std::once_flag, kDefaultNormalFormBound + 1> once;
  static std::array<ShapeTable, kDefaultNormalFormBound + 1> tables;
  std::call_once(once[n], [n] {
    ShapeTable& t = tables[n];
    for (const JonesNF& nf : enumerate_jnf_shapes(n)) {
      const TLDiagram d = eval_word(n, to_generator_word(nf));
      if (d.loops() != 0) throw std::logic_error("normal form shape evaluates with loops");
      if (!t.by_matching.emplace(d.matching(), nf).second)
        throw std::logic_error("two normal forms evaluate to the same diagram");
    }
    if (t.by_matching.size() != catalan(n)) throw std::logic_error("normal form count is not Catalan(n)");
  });
  return tables[n];
}

}  // namespace

std::vector<JonesNF> enumerate_jnf_shapes(std::size_t n, std::size_t max_n) {
  if (n < 2) throw std::invalid_argument("a diagram needs at least 2 strands");
  if (n > max_n) throw std::invalid_argument("strand count above the normal form enumeration bound");
  std::vector<JonesNF> out;
  JonesNF cur;
  extend_shapes(n, cur, out);
  return out;
}

GeneratorWord to_generator_word(const JonesNF& nf) {
  GeneratorWord out(nf.c_exp, Generator::c());
  for (const auto& run : nf.runs)
    for (std::size_t i = run.top + 1; i-- > run.bottom;) out.push_back(Generator::h(i));
  return out;
}

JonesNF jones_nf(const TLDiagram& d) {
  if (d.strands() > kDefaultNormalFormBound)
    throw std::invalid_argument("strand count above the normal form enumeration bound");
  const ShapeTable& table = shape_table(d.strands());
  const auto it = table.by_matching.find(d.matching());
  if (it == table.by_matching.end()) throw std::logic_error("diagram has no normal form");
  JonesNF nf = it->second;
  nf.c_exp = d.loops();
  return nf;
}

std::string render(const JonesNF& nf) {
  std::string out;
  if (nf.c_exp == 1) out = "c";
  else if (nf.c_exp > 1) out = "c^" + std::to_string(nf.c_exp);
  for (const auto& run : nf.runs) {
    if (!out.empty()) out += ' ';
    out += "h[" + std::to_string(run.top);
    if (run.bottom != run.top) out += "," + std::to_string(run.bottom);
    out += ']';
  }
  return out.empty() ? "1" : out;
}

K3Class classify_k3(const TLDiagram& d) {
  if (d.strands() != 3) throw std::invalid_argument("classify_k3 needs a diagram on 3 strands");
  const JonesNF nf = jones_nf(d);
  const auto& r = nf.runs;
  K3Family family = K3Family::C;
  if (r.size() == 1 && r[0] == DescendingRun{1, 1}) family = K3Family::H11;
  else if (r.size() == 2) family = K3Family::H12;  // h[1] h[2]
  else if (r.size() == 1 && r[0] == DescendingRun{2, 1}) family = K3Family::H21;
  else if (r.size() == 1 && r[0] == DescendingRun{2, 2}) family = K3Family::H22;
  return {family, nf.c_exp};
}

std::string_view to_string(K3Family f) {
  switch (f) {
    case K3Family::C: return "C";
    case K3Family::H11: return "H11";
    case K3Family::H12: return "H12";
    case K3Family::H21: return "H21";
    case K3Family::H22: return "H22";
  }
  return "?";
}

}  // namespace kmon
