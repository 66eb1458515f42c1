#include "unitgraph/dsl.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "unitgraph/errors.hpp"
#include "unitgraph/number_theory.hpp"

namespace unitgraph {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RingDescriptor parse() {
    auto r = ring();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip();
    return s_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::uint64_t nat() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc{}) fail_at("number out of range", start);
    return v;
  }

  RingDescriptor ring() {
    std::vector<RingDescriptor> factors;
    auto push = [&](RingDescriptor d) {
      if (const auto* p = d.as<ProductNode>()) {
        factors.insert(factors.end(), p->factors.begin(), p->factors.end());
      } else {
        factors.push_back(std::move(d));
      }
    };
    const auto first = atom();
    if (!peek("x")) return first;
    push(first);
    while (accept("x")) push(atom());
    return RingDescriptor::product(std::move(factors));
  }

  RingDescriptor gf_atom(std::size_t at) {
    expect("(");
    const auto q = nat();
    expect(")");
    if (!nt::prime_power(q)) fail_at(std::to_string(q) + " is not a prime power", at);
    return RingDescriptor::gf(q);
  }

  RingDescriptor atom() {
    skip();
    const std::size_t at = pos_;
    if (accept("GF")) return gf_atom(at);
    if (accept("GA")) {
      expect("(");
      auto f = field();
      expect(",");
      auto g = group();
      expect(")");
      return RingDescriptor::group_algebra(std::move(f), g);
    }
    if (accept("Z")) {
      const auto n = nat();
      if (n < 2) fail_at("Z" + std::to_string(n) + ": modulus must be at least 2", at);
      return RingDescriptor::zn(n);
    }
    if (accept("M")) {
      const std::size_t kat = pos_;
      const auto k = nat();
      if (k < 1) fail_at("M0: matrix size must be at least 1", at);
      if (k > UINT32_MAX) fail_at("matrix size out of range", kat);
      expect("(");
      auto base = ring();
      expect(")");
      return RingDescriptor::mat(static_cast<std::uint32_t>(k), std::move(base));
    }
    if (accept("(")) {
      auto r = ring();
      expect(")");
      return r;
    }
    if (pos_ == s_.size()) fail("unexpected end of input");
    fail("expected a ring");
  }

  RingDescriptor field() {
    skip();
    const std::size_t at = pos_;
    if (accept("GF")) return gf_atom(at);
    if (accept("Z")) {
      const auto p = nat();
      if (!nt::is_prime(p)) fail_at("Z" + std::to_string(p) + " is not a field", at);
      return RingDescriptor::zn(p);
    }
    fail("expected a field");
  }

  GroupId group() {
    skip();
    const std::size_t at = pos_;
    if (accept("D4")) return GroupId::dihedral8();
    if (accept("Q8")) return GroupId::quaternion8();
    if (accept("C")) {
      const auto m = nat();
      if (m < 1 || m > UINT32_MAX) fail_at("cyclic group order must be at least 1", at);
      return GroupId::cyclic(static_cast<std::uint32_t>(m));
    }
    fail("expected a group (Cn, D4 or Q8)");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingDescriptor parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace unitgraph
