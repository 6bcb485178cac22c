#include "crysref/scalar_parse.hpp"

#include <cctype>

#include "crysref/errors.hpp"

namespace crysref {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  CycloNum parse() {
    CycloNum v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorCode::ParseError, "scalar '" + std::string(s_) + "': " + msg);
  }
  long long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  bool atom_starts() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'i' || c == 'w' || c == 'z' || c == 's';
  }

  CycloNum expr() {
    CycloNum v = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }
  CycloNum term() {
    CycloNum v = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v *= factor();
      } else if (peek('/')) {
        ++pos_;
        v /= factor();
      } else if (atom_starts()) {
        v *= factor();
      } else {
        return v;
      }
    }
  }
  CycloNum factor() {
    if (peek('-')) {
      ++pos_;
      return -factor();
    }
    if (peek('+')) {
      ++pos_;
      return factor();
    }
    CycloNum a = atom();
    if (peek('^')) {
      ++pos_;
      bool neg = false;
      if (peek('-')) {
        ++pos_;
        neg = true;
      }
      long long e = integer();
      a = a.pow(neg ? -e : e);
    }
    return a;
  }
  CycloNum atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return CycloNum(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (c == '(') {
      ++pos_;
      CycloNum v = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return v;
    }
    ++pos_;
    switch (c) {
      case 'i': return CycloNum::zeta(4);
      case 'w': return CycloNum::zeta(3);
      case 'z': {
        long long m = integer();
        if (m < 1 || m > kMaxFieldOrder) error("bad root-of-unity order");
        return CycloNum::zeta(static_cast<int>(m));
      }
      case 's': {
        long long k = integer();
        if (k == 2) return CycloNum::zeta(8) + CycloNum::zeta(8, -1);
        if (k == 3) return CycloNum::zeta(12) + CycloNum::zeta(12, -1);
        error("only s2 and s3 are supported");
      }
      default: error("unknown symbol '" + std::string(1, c) + "'");
    }
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

CycloNum parse_scalar(std::string_view text, int order) {
  CycloNum v = ExprParser(text).parse();
  try {
    return coerce_order(v, order);
  } catch (const Error&) {
    fail(ErrorCode::ParseError, "scalar '" + std::string(text) + "' does not lie in Q(zeta_" + std::to_string(order) + ")");
  }
}

std::vector<std::pair<int, std::string>> scalar_terms(const CycloNum& z) {
  std::vector<std::pair<int, std::string>> out;
  for (int i = 0; i < z.phi(); ++i) {
    Rational c = z.coeff(i);
    if (!c.is_zero()) out.emplace_back(i, c.to_string());
  }
  return out;
}

}  // namespace crysref
