#include "strata_cli/space_spec.hpp"

#include <cctype>
#include <charconv>

namespace strata::cli {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }
  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos;
    if (peek() == '-') ++pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + pos, v);
    if (ec != std::errc() || ptr != s.data() + pos) throw ParseError("expected an integer", start);
    return v;
  }
};

}  // namespace

SpaceSpec SpaceSpec::parse(std::string_view text) {
  SpaceSpec spec;
  Cursor c{text};
  do {
    c.skip_ws();
    const std::size_t start = c.pos;
    FormType form;
    if (text.substr(c.pos, 2) == "Sp") {
      form = FormType::skew;
      c.pos += 2;
    } else if (c.peek() == 'O') {
      form = FormType::symmetric;
      c.pos += 1;
    } else {
      throw ParseError("expected a factor 'Sp<n>' or 'O<n>'", start);
    }
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) {
      throw ParseError("expected the factor dimension", c.pos);
    }
    const std::size_t dpos = c.pos;
    std::int64_t n = c.integer();
    if (n < 1) throw ParseError("factor dimension must be at least 1", dpos);
    if (form == FormType::skew && n % 2 != 0) throw ParseError("symplectic factor needs even dimension", dpos);
    spec.factors.push_back({form, static_cast<std::size_t>(n)});
    c.skip_ws();
  } while (c.accept('+'));
  if (!c.done()) throw ParseError("unexpected character '" + std::string(1, c.peek()) + "'", c.pos);
  return spec;
}

std::string SpaceSpec::to_string() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "+";
    s += (f.form == FormType::skew ? "Sp" : "O") + std::to_string(f.dim);
  }
  return s;
}

std::size_t SpaceSpec::dim() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.dim;
  return n;
}

SumSpace SpaceSpec::build(unsigned prime) const { return standard_sum(factors, PrimeField(prime)); }

MultiLabel parse_label(const SpaceSpec& spec, std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  // Optional outer parentheses around the list of pairs.
  bool outer = false;
  {
    Cursor probe = c;
    probe.expect('(');
    probe.skip_ws();
    outer = probe.peek() == '(';
  }
  if (outer) c.expect('(');
  MultiLabel label;
  do {
    const std::size_t start = c.pos;
    c.expect('(');
    std::int64_t k = c.integer();
    c.expect(',');
    c.skip_ws();
    const std::size_t rpos = c.pos;
    std::int64_t r = c.integer();
    RankSymbol sym = RankSymbol::integer(static_cast<std::size_t>(r < 0 ? 0 : r));
    if (r < 0 || k < 0) throw ParseError("negative label entry", rpos);
    if (c.peek() == '\'') {
      ++c.pos;
      sym = RankSymbol::prime0();
      if (c.peek() == '\'') {
        ++c.pos;
        sym = RankSymbol::doubleprime0();
      }
    } else if (c.peek() == 'p') {
      ++c.pos;
      sym = RankSymbol::prime0();
      if (c.peek() == 'p') {
        ++c.pos;
        sym = RankSymbol::doubleprime0();
      }
    }
    if (sym.is_special() && r != 0) throw ParseError("only 0 can carry a prime", rpos);
    c.expect(')');
    const std::size_t i = label.parts.size();
    if (i >= spec.factors.size()) throw ParseError("more label parts than factors", start);
    label.parts.push_back({spec.factors[i].form, spec.factors[i].dim, static_cast<std::size_t>(k), sym});
    if (!is_valid(label.parts.back())) {
      throw ParseError("invalid label part " + label.parts.back().to_string(), start);
    }
  } while (c.accept(','));
  if (outer) c.expect(')');
  c.skip_ws();
  if (!c.done()) throw ParseError("unexpected trailing input", c.pos);
  if (label.parts.size() != spec.factors.size()) {
    throw ParseError("label needs one part per factor (" + std::to_string(spec.factors.size()) + ")",
                     c.pos);
  }
  return label;
}

std::vector<std::vector<std::int64_t>> parse_rows(std::string_view text) {
  std::vector<std::vector<std::int64_t>> rows(1);
  Cursor c{text};
  c.skip_ws();
  if (c.done()) return {};
  while (true) {
    rows.back().push_back(c.integer());
    if (c.accept(',')) continue;
    if (c.accept(';')) {
      rows.emplace_back();
      continue;
    }
    c.skip_ws();
    if (c.done()) break;
    throw ParseError("expected ',' or ';'", c.pos);
  }
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ParseError("rows have different lengths", 0);
  }
  return rows;
}

std::vector<unsigned> parse_primes(std::string_view text) {
  std::vector<unsigned> out;
  Cursor c{text};
  do {
    const std::size_t at = c.pos;
    std::int64_t p = c.integer();
    if (p < 3 || p > PrimeField::kMaxModulus || !is_prime(static_cast<std::uint64_t>(p))) {
      throw ParseError("expected an odd prime <= " + std::to_string(PrimeField::kMaxModulus), at);
    }
    out.push_back(static_cast<unsigned>(p));
  } while (c.accept(','));
  c.skip_ws();
  if (!c.done()) throw ParseError("unexpected trailing input", c.pos);
  return out;
}

}  // namespace strata::cli
