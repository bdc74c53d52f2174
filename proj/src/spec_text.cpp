#include "spec_text.hpp"

#include <cctype>

#include "errors.hpp"

namespace braidforge {

namespace {

class Cursor {
public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    return text_[pos_];
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected a number", pos_);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) throw ParseError("number too large", pos_);
      ++pos_;
    }
    return static_cast<int>(v);
  }

  std::size_t pos() const { return pos_; }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

// (a,b) or, with overlined = true, (a,~b).
Block pair(Cursor& c, bool overlined) {
  c.expect('(');
  Block b{};
  b.r = c.number();
  c.expect(',');
  if (overlined)
    c.expect('~');
  else if (c.accept('~'))
    throw ParseError("'~' only allowed in the reversed section", c.pos() - 1);
  b.s = c.number();
  c.expect(')');
  return b;
}

// Comma-separated pair list, possibly empty; stops before stop_char.
std::vector<Block> pair_list(Cursor& c, bool overlined, char stop_char) {
  std::vector<Block> out;
  if (c.peek() == stop_char) return out;
  out.push_back(pair(c, overlined));
  while (c.accept(',')) out.push_back(pair(c, overlined));
  return out;
}

}  // namespace

ParsedSpec parse_spec(const std::string& text) {
  Cursor c(text);
  char kind = c.peek();
  if (kind == 'T') {
    c.expect('T');
    c.expect('[');
    std::vector<Block> blocks = pair_list(c, false, ']');
    c.expect(']');
    if (!c.at_end()) throw ParseError("trailing characters", c.pos());
    TLinkSpec t{std::move(blocks)};
    if (t.blocks.empty()) throw EmptyLink("T-spec has no blocks");
    normalize_t(t);  // surface invariant violations now; caller keeps raw form
    return t;
  }
  if (kind == 'V') {
    c.expect('V');
    c.expect('[');
    VLinkSpec v{};
    v.rev = pair_list(c, true, ';');
    c.expect(';');
    v.plain = pair_list(c, false, ';');
    c.expect(';');
    Block torus = pair(c, false);
    c.expect(']');
    if (!c.at_end()) throw ParseError("trailing characters", c.pos());
    v.torus = torus;
    validate(v);
    return v;
  }
  throw ParseError("spec must start with 'T' or 'V'", c.pos());
}

std::string format(const TLinkSpec& t) {
  std::string out = "T[";
  for (std::size_t i = 0; i < t.blocks.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(t.blocks[i].r) + "," + std::to_string(t.blocks[i].s) + ")";
  }
  return out + "]";
}

std::string format(const VLinkSpec& v) {
  std::string out = "V[";
  for (std::size_t i = 0; i < v.rev.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(v.rev[i].r) + ",~" + std::to_string(v.rev[i].s) + ")";
  }
  out += ";";
  for (std::size_t i = 0; i < v.plain.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(v.plain[i].r) + "," + std::to_string(v.plain[i].s) + ")";
  }
  out += ";(" + std::to_string(v.torus.r) + "," + std::to_string(v.torus.s) + ")";
  return out + "]";
}

std::string format(const ParsedSpec& spec) {
  if (auto* t = std::get_if<TLinkSpec>(&spec)) return format(*t);
  return format(std::get<VLinkSpec>(spec));
}

}  // namespace braidforge
