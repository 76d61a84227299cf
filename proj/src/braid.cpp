#include "zcol/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace zcol {

namespace {

struct Token {
  enum Kind { Int, Colon, LParen, RParen, Caret, End } kind;
  long long value = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
    if (i_ >= s_.size()) return {Token::End};
    char c = s_[i_];
    if (c == ':') { ++i_; return {Token::Colon}; }
    if (c == '(') { ++i_; return {Token::LParen}; }
    if (c == ')') { ++i_; return {Token::RParen}; }
    if (c == '^') { ++i_; return {Token::Caret}; }
    if (c == '-' || std::isdigit((unsigned char)c)) {
      size_t j = i_ + 1;
      while (j < s_.size() && std::isdigit((unsigned char)s_[j])) ++j;
      if (j == i_ + 1 && c == '-') fail(errc::MalformedWord, "stray '-' in braid word");
      long long v = std::strtoll(s_.substr(i_, j - i_).c_str(), nullptr, 10);
      i_ = j;
      return {Token::Int, v};
    }
    fail(errc::MalformedWord, std::string("unexpected character '") + c + "'");
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { advance(); }

  BraidWord parse() {
    if (tok_.kind != Token::Int) fail(errc::MalformedWord, "expected strand count");
    long long b = tok_.value;
    advance();
    if (tok_.kind != Token::Colon) fail(errc::MalformedWord, "expected ':' after strand count");
    if (b <= 0) fail(errc::NonPositiveStrands, "strand count must be positive");
    advance();
    BraidWord w;
    w.strands = (int)b;
    w.letters = sequence(/*depth=*/0);
    if (tok_.kind != Token::End) fail(errc::MalformedWord, "trailing input after braid word");
    for (int l : w.letters) {
      if (l == 0) fail(errc::MalformedWord, "generator 0 is not a letter");
      int a = l > 0 ? l : -l;
      if (a >= w.strands)
        fail(errc::GeneratorOutOfRange,
             "generator " + std::to_string(l) + " needs more than " + std::to_string(w.strands) +
                 " strands");
    }
    return w;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  std::vector<int> sequence(int depth) {
    std::vector<int> out;
    for (;;) {
      if (tok_.kind == Token::Int) {
        long long v = tok_.value;
        if (v == 0) fail(errc::MalformedWord, "generator 0 is not a letter");
        out.push_back((int)v);
        advance();
      } else if (tok_.kind == Token::LParen) {
        advance();
        std::vector<int> group = sequence(depth + 1);
        if (tok_.kind != Token::RParen) fail(errc::MalformedWord, "unclosed '('");
        advance();
        if (tok_.kind != Token::Caret) fail(errc::MalformedWord, "group requires '^<exp>'");
        advance();
        if (tok_.kind != Token::Int) fail(errc::MalformedWord, "expected exponent after '^'");
        long long e = tok_.value;
        advance();
        std::vector<int> unit = group;
        if (e < 0) {
          unit.assign(group.rbegin(), group.rend());
          for (int& l : unit) l = -l;
          e = -e;
        }
        for (long long k = 0; k < e; ++k) out.insert(out.end(), unit.begin(), unit.end());
      } else if (tok_.kind == Token::RParen) {
        if (depth == 0) fail(errc::MalformedWord, "unmatched ')'");
        return out;
      } else if (tok_.kind == Token::End) {
        if (depth > 0) fail(errc::MalformedWord, "unclosed '('");
        return out;
      } else {
        fail(errc::MalformedWord, "unexpected token in braid word");
      }
    }
  }

  Lexer lex_;
  Token tok_{Token::End};
};

}  // namespace

BraidWord parse_braid(const std::string& text) { return Parser(text).parse(); }

std::string format_braid(const BraidWord& w) {
  std::ostringstream os;
  os << w.strands << ":";
  for (int l : w.letters) os << ' ' << l;
  return os.str();
}

BraidWord torus_braid(long long p, int q) {
  if (q <= 0) fail(errc::NonPositiveStrands, "torus braid needs at least one strand");
  BraidWord w;
  w.strands = q;
  std::vector<int> twist;
  for (int i = 1; i < q; ++i) twist.push_back(i);
  if (p < 0) {
    std::vector<int> inv(twist.rbegin(), twist.rend());
    for (int& l : inv) l = -l;
    twist = inv;
    p = -p;
  }
  for (long long k = 0; k < p; ++k) w.letters.insert(w.letters.end(), twist.begin(), twist.end());
  return w;
}

CablePlan cable(const BraidWord& w, int n) {
  if (n <= 0) fail(errc::InvalidParams, "cable copy count must be positive");
  CablePlan plan;
  plan.n = n;
  plan.source = w;
  plan.cabled.strands = w.strands * n;
  plan.cabled.letters.reserve(w.letters.size() * (size_t)n * n);
  for (int l : w.letters) {
    int i = l > 0 ? l : -l;
    int sgn = l > 0 ? 1 : -1;
    int s = n * (i - 1);
    // One band crosses the other whole: n runs, run k walking the k-th copy
    // of the under band across all n copies of the over band.
    for (int k = 1; k <= n; ++k)
      for (int j = n + k - 1; j >= k; --j) plan.cabled.letters.push_back(sgn * (s + j));
  }
  return plan;
}

long long writhe(const BraidWord& w) {
  long long s = 0;
  for (int l : w.letters) s += l > 0 ? 1 : -1;
  return s;
}

}  // namespace zcol
