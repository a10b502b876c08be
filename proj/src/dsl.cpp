#include "stk/dsl.hpp"

#include <cctype>
#include <cstdlib>

#include "stk/error.hpp"

namespace stk {

namespace {

class Parser {
 public:
  Parser(std::string_view s, RingPtr ring, ContextPtr ctx) : s_(s), ring_(std::move(ring)), ctx_(std::move(ctx)) {}

  RingElem ring_expr() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    RingElem r = ring_term();
    if (neg) r = -r;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      RingElem t = ring_term();
      r = c == '+' ? r + t : r - t;
    }
    return r;
  }

  Word word_expr() {
    Word w = factor();
    for (;;) {
      skip();
      if (peek() != '*') break;
      ++pos_;
      w = w * factor();
    }
    return w;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input", pos_, s_.size());
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t b, std::size_t e) const {
    throw ParseError(msg, b, std::max(b, e));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'", pos_, pos_ + 1);
    ++pos_;
  }
  std::string ident() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  int64_t integer() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected an integer", b, b + 1);
    if (pos_ - b > 18) fail("integer literal too large", b, pos_);
    return std::strtoll(std::string(s_.substr(b, pos_ - b)).c_str(), nullptr, 10);
  }

  RingElem ring_term() {
    RingElem r = ring_power();
    for (;;) {
      skip();
      char c = peek();
      if (c != '*' && c != '/') break;
      // inside a word, '*' followed by a word factor belongs to the word
      if (c == '*' && ctx_ && depth_ == 0) break;
      std::size_t b = pos_++;
      RingElem t = ring_power();
      if (c == '*') {
        r = r * t;
      } else {
        try {
          r = r * t.inverse();
        } catch (const NotAUnit&) {
          fail("division by a non-unit: " + t.str(), b, pos_);
        }
      }
    }
    return r;
  }

  RingElem ring_power() {
    std::size_t b = pos_;
    RingElem r = ring_primary();
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      int64_t e = integer();
      if (e > 10000) fail("exponent too large", b, pos_);
      if (neg) {
        try {
          r = r.inverse().pow(static_cast<int>(e));
        } catch (const NotAUnit&) {
          fail("negative power of a non-unit", b, pos_);
        }
      } else {
        r = r.pow(static_cast<int>(e));
      }
    }
    return r;
  }

  RingElem ring_primary() {
    skip();
    std::size_t b = pos_;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return ring_->constant(integer());
    if (c == '(') {
      ++pos_;
      ++depth_;
      RingElem r = ring_expr();
      --depth_;
      expect(')');
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id = ident();
      if (id == "X") return ring_->X();
      if (ring_->var_index(id) < 0) fail("unknown variable '" + id + "'", b, pos_);
      return ring_->var(id);
    }
    fail("expected a ring expression", b, b + 1);
  }

  Root root() {
    skip();
    std::size_t b = pos_;
    if (peek() == 's') ++pos_;
    if (peek() != '[') fail("expected a root", b, pos_ + 1);
    std::size_t close = s_.find(']', pos_);
    if (close == std::string_view::npos) fail("unterminated root", b, s_.size());
    pos_ = close + 1;
    try {
      return ctx_->phi->parse_root(s_.substr(b, pos_ - b));
    } catch (const NoSuchRoot& e) {
      fail(e.what(), b, pos_);
    }
  }

  RingElem arg() {
    ++depth_;
    RingElem r = ring_expr();
    --depth_;
    return r;
  }

  Word factor() {
    skip();
    std::size_t b = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = word_expr();
      expect(')');
      return w;
    }
    if (c == '1') {
      ++pos_;
      return identity(ctx_);
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a word factor", b, b + 1);
    std::string id = ident();
    skip();
    if (id == "inv" || id == "comm" || id == "conj") {
      expect('(');
      Word x = word_expr();
      if (id == "inv") {
        expect(')');
        return x.inverse();
      }
      expect(',');
      Word y = word_expr();
      expect(')');
      return id == "comm" ? comm(x, y) : conj(x, y);
    }
    if (id == "diag") {
      expect('(');
      std::vector<RingElem> es{arg()};
      for (;;) {
        skip();
        if (peek() != ',') break;
        ++pos_;
        es.push_back(arg());
      }
      expect(')');
      try {
        return diag_letter(ctx_, std::move(es));
      } catch (const ConfigError& e) {
        fail(e.what(), b, pos_);
      }
    }
    bool one = id == "x" || id == "h" || id == "w";
    bool two = id == "z" || id == "c" || id == "sym" || id == "ds";
    if (!one && !two) fail("unknown word atom '" + id + "'", b, pos_);
    Root r = root();
    expect('(');
    RingElem s = arg();
    RingElem t;
    if (two) {
      expect(',');
      t = arg();
    }
    expect(')');
    try {
      if (id == "x") return gen(ctx_, r, s);
      if (id == "w") return w_elem(ctx_, r, s);
      if (id == "h") return h_elem(ctx_, r, s);
      if (id == "z") return z_elem(ctx_, r, s, t);
      if (id == "c") return c_elem(ctx_, r, s, t);
      if (id == "sym") return sym_elem(ctx_, r, s, t);
      return ds_elem(ctx_, r, s, t);
    } catch (const NotAUnit& e) {
      fail(e.what(), b, pos_);
    }
  }

  std::string_view s_;
  RingPtr ring_;
  ContextPtr ctx_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

RingElem parse_ring(const RingPtr& ring, std::string_view text) {
  Parser p(text, ring, nullptr);
  RingElem r = p.ring_expr();
  p.finish();
  return r;
}

Word parse_word(const ContextPtr& ctx, std::string_view text) {
  Parser p(text, ctx->ring, ctx);
  Word w = p.word_expr();
  p.finish();
  return w;
}

std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += " * ";
    if (l.is_diag()) {
      out += "diag(";
      for (std::size_t i = 0; i < l.diag.size(); ++i) out += (i ? ", " : "") + l.diag[i].str();
      out += ")";
    } else {
      out += "x" + w.ctx()->phi->format(l.root) + "(" + l.coeff.str() + ")";
    }
  }
  return out;
}

}  // namespace stk
