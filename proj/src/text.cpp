#include "monoclean/text.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <unordered_map>

#include "monoclean/errors.hpp"

namespace monoclean {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingContext& ring) : text_(text), ring_(ring) {
    for (std::size_t i = 0; i < ring.nvars(); ++i) index_.emplace(ring.name(i), i);
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input", next_token());
  }

  bool peek_zero_ideal() {
    skip_space();
    std::size_t save = pos_;
    if (pos_ < text_.size() && text_[pos_] == '0') {
      ++pos_;
      bool alone = at_end();
      pos_ = save;
      return alone;
    }
    return false;
  }

  Monomial monomial() {
    std::vector<Exponent> exps(ring_.nvars(), 0);
    do {
      factor(exps);
    } while (accept('*'));
    return Monomial(std::move(exps));
  }

  [[noreturn]] void fail(const std::string& what, const std::string& token) const {
    throw ParseError(what, token, token_start_);
  }

  std::string next_token() {
    skip_space();
    token_start_ = pos_;
    if (pos_ >= text_.size()) return "<end>";
    std::size_t end = pos_ + 1;
    if (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_') {
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
    }
    return std::string(text_.substr(pos_, end - pos_));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void factor(std::vector<Exponent>& exps) {
    std::string tok = next_token();
    char c = tok.front();
    if (tok == "<end>") fail("expected a variable", tok);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (tok != "1") fail("coefficients are not allowed", tok);
      pos_ += tok.size();
      return;
    }
    if (c == '-') fail("negative exponents and coefficients are not allowed", tok);
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') fail("expected a variable", tok);
    auto it = index_.find(tok);
    if (it == index_.end()) fail("unknown variable", tok);
    pos_ += tok.size();
    std::uint64_t power = 1;
    if (accept('^')) {
      std::string ptok = next_token();
      if (ptok.front() == '-') fail("negative exponents are not allowed", ptok);
      std::uint64_t value = 0;
      auto [p, ec] = std::from_chars(ptok.data(), ptok.data() + ptok.size(), value);
      if (ec != std::errc{} || p != ptok.data() + ptok.size()) fail("expected an exponent", ptok);
      pos_ += ptok.size();
      power = value;
    }
    std::uint64_t total = exps[it->second] + power;
    if (total > kMaxExponent) fail("exponent exceeds 2^31 - 1", tok);
    exps[it->second] = static_cast<Exponent>(total);
  }

  std::string_view text_;
  const RingContext& ring_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t pos_ = 0;
  std::size_t token_start_ = 0;
};

std::vector<Monomial> parse_list(std::string_view text, const RingContext& ring) {
  Parser p(text, ring);
  bool parens = p.accept('(');
  std::vector<Monomial> out;
  do {
    out.push_back(p.monomial());
  } while (p.accept(','));
  if (parens && !p.accept(')')) p.fail("expected ')'", p.next_token());
  p.expect_end();
  return out;
}

}  // namespace

Monomial parse_monomial(std::string_view text, const RingContext& ring) {
  Parser p(text, ring);
  Monomial m = p.monomial();
  p.expect_end();
  return m;
}

MonomialIdeal parse_ideal(std::string_view text, const RingContext& ring) {
  Parser p(text, ring);
  if (p.peek_zero_ideal()) return MonomialIdeal::zero(ring.nvars());
  return MonomialIdeal(ring.nvars(), parse_list(text, ring));
}

std::vector<Monomial> parse_sequence(std::string_view text, const RingContext& ring) {
  return parse_list(text, ring);
}

std::size_t infer_nvars(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    if (i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_')) continue;
    std::size_t j = i + 1;
    std::size_t value = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      value = value * 10 + static_cast<std::size_t>(text[j] - '0');
      ++j;
    }
    if (j > i + 1) best = std::max(best, value);
  }
  return best;
}

std::string format(const Monomial& m, const RingContext& ring) {
  require_same_ring(m.nvars(), ring.nvars());
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string format(std::span<const Monomial> seq, const RingContext& ring) {
  std::string out;
  for (const auto& g : seq) {
    if (!out.empty()) out += ", ";
    out += format(g, ring);
  }
  return out;
}

std::string format(const MonomialIdeal& ideal, const RingContext& ring) {
  if (ideal.is_zero()) return "0";
  return format(std::span<const Monomial>(ideal.gens()), ring);
}

std::string format(const MonomialPrime& p, const RingContext& ring) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.vars().size(); ++k) {
    if (k) out += ", ";
    out += ring.name(p.vars()[k]);
  }
  if (p.vars().empty()) out += "0";
  return out + ")";
}

}  // namespace monoclean
