#include "lterm/term.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <limits>
#include <ostream>

namespace lterm {

// ---------------------------------------------------------------------------
// Term

Term Term::var(std::uint64_t succ) {
  return Term({TermNode{TermTag::Var, succ}});
}

Term Term::abs(const Term& body) {
  std::vector<TermNode> nodes;
  nodes.reserve(1 + body.nodes_.size());
  nodes.push_back(TermNode{TermTag::Abs, 0});
  nodes.insert(nodes.end(), body.nodes_.begin(), body.nodes_.end());
  return Term(std::move(nodes));
}

Term Term::app(const Term& left, const Term& right) {
  std::vector<TermNode> nodes;
  nodes.reserve(1 + left.nodes_.size() + right.nodes_.size());
  nodes.push_back(TermNode{TermTag::App, 0});
  nodes.insert(nodes.end(), left.nodes_.begin(), left.nodes_.end());
  nodes.insert(nodes.end(), right.nodes_.begin(), right.nodes_.end());
  return Term(std::move(nodes));
}

Term Term::from_preorder(std::vector<TermNode> nodes) {
  std::uint64_t pending = 1;
  for (const TermNode& n : nodes) {
    if (pending == 0)
      throw ValidationError(ValidationError::Kind::BadArgument,
                            "preorder node list continues past a complete term");
    pending -= 1;
    switch (n.tag) {
      case TermTag::Var: break;
      case TermTag::Abs: pending += 1; break;
      case TermTag::App: pending += 2; break;
    }
  }
  if (pending != 0 || nodes.empty())
    throw ValidationError(ValidationError::Kind::BadArgument,
                          "preorder node list does not form a complete term");
  return Term(std::move(nodes));
}

std::vector<std::uint32_t> Term::subtree_extents() const {
  const std::size_t n = nodes_.size();
  std::vector<std::uint32_t> ext(n);
  for (std::size_t i = n; i-- > 0;) {
    switch (nodes_[i].tag) {
      case TermTag::Var:
        ext[i] = 1;
        break;
      case TermTag::Abs:
        ext[i] = 1 + ext[i + 1];
        break;
      case TermTag::App:
        ext[i] = 1 + ext[i + 1] + ext[i + 1 + ext[i + 1]];
        break;
    }
  }
  return ext;
}

// ---------------------------------------------------------------------------
// TermBuilder

void TermBuilder::push(TermTag tag, std::uint64_t succ) {
  if (pending_ == 0)
    throw ValidationError(ValidationError::Kind::BadArgument,
                          "term is already complete");
  pending_ -= 1;
  if (tag == TermTag::Abs) pending_ += 1;
  if (tag == TermTag::App) pending_ += 2;
  nodes_.push_back(TermNode{tag, tag == TermTag::Var ? succ : 0});
}

Term TermBuilder::take() {
  if (!complete())
    throw ValidationError(ValidationError::Kind::BadArgument,
                          "term is incomplete");
  Term t = Term::from_preorder(std::move(nodes_));
  reset();
  return t;
}

void TermBuilder::reset() {
  nodes_.clear();
  pending_ = 1;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class TokKind { Lambda, LParen, RParen, Zero, Succ, Number, End };

struct Token {
  TokKind kind;
  std::uint64_t value = 0; // de Bruijn index for Number
  std::size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
    if (pos_ >= s_.size()) return {TokKind::End, 0, pos_};
    const std::size_t at = pos_;
    const char c = s_[pos_];
    if (c == '\\') { ++pos_; return {TokKind::Lambda, 0, at}; }
    if (static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < s_.size() &&
        static_cast<unsigned char>(s_[pos_ + 1]) == 0xBB) { // UTF-8 lambda
      pos_ += 2;
      return {TokKind::Lambda, 0, at};
    }
    if (c == '(') { ++pos_; return {TokKind::LParen, 0, at}; }
    if (c == ')') { ++pos_; return {TokKind::RParen, 0, at}; }
    if (c == 'S') { ++pos_; return {TokKind::Succ, 0, at}; }
    if (c == '0') {
      ++pos_;
      if (pos_ < s_.size() && is_digit(s_[pos_]))
        throw ParseError(at, "de Bruijn indices start at 1; use successor notation for 0");
      return {TokKind::Zero, 0, at};
    }
    if (is_digit(c)) {
      std::uint64_t v = 0;
      while (pos_ < s_.size() && is_digit(s_[pos_])) {
        const std::uint64_t digit = static_cast<std::uint64_t>(s_[pos_] - '0');
        if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
          throw ParseError(at, "de Bruijn index out of range");
        v = v * 10 + digit;
        ++pos_;
      }
      return {TokKind::Number, v, at};
    }
    throw ParseError(at, "unexpected character '" + std::string(1, c) + "'");
  }

private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

struct AstNode {
  TermTag tag;
  std::uint64_t succ = 0;
  std::int32_t left = -1;
  std::int32_t right = -1;
};

struct Frame {
  enum class Kind { Root, Paren, Lambda } kind;
  std::size_t open_pos;
  std::vector<std::int32_t> items;
};

} // namespace

Term parse_term(std::string_view text) {
  Lexer lex(text);
  std::vector<AstNode> arena;
  std::vector<Frame> frames;
  frames.push_back({Frame::Kind::Root, 0, {}});

  auto add_var = [&](std::uint64_t succ) {
    arena.push_back({TermTag::Var, succ});
    frames.back().items.push_back(static_cast<std::int32_t>(arena.size() - 1));
  };

  auto reduce = [&](Frame& f) -> std::int32_t {
    if (f.items.empty())
      throw ParseError(f.open_pos, f.kind == Frame::Kind::Lambda
                                       ? "abstraction is missing a body"
                                       : "expected a term");
    std::int32_t acc = f.items[0];
    for (std::size_t i = 1; i < f.items.size(); ++i) {
      arena.push_back({TermTag::App, 0, acc, f.items[i]});
      acc = static_cast<std::int32_t>(arena.size() - 1);
    }
    return acc;
  };

  // Closes lambda frames (a lambda body extends to the end of its group).
  auto close_lambdas = [&]() {
    while (frames.back().kind == Frame::Kind::Lambda) {
      std::int32_t body = reduce(frames.back());
      frames.pop_back();
      arena.push_back({TermTag::Abs, 0, body});
      frames.back().items.push_back(static_cast<std::int32_t>(arena.size() - 1));
    }
  };

  for (;;) {
    Token tok = lex.next();
    switch (tok.kind) {
      case TokKind::Lambda:
        frames.push_back({Frame::Kind::Lambda, tok.pos, {}});
        break;
      case TokKind::LParen:
        frames.push_back({Frame::Kind::Paren, tok.pos, {}});
        break;
      case TokKind::Number:
        if (tok.value == 0) throw ParseError(tok.pos, "de Bruijn indices start at 1");
        add_var(tok.value - 1);
        break;
      case TokKind::Zero:
        add_var(0);
        break;
      case TokKind::Succ: {
        std::uint64_t succ = 1;
        Token t2 = lex.next();
        while (t2.kind == TokKind::Succ) {
          ++succ;
          t2 = lex.next();
        }
        if (t2.kind != TokKind::Zero)
          throw ParseError(t2.pos, "successor string must end with 0");
        add_var(succ);
        break;
      }
      case TokKind::RParen: {
        close_lambdas();
        if (frames.back().kind != Frame::Kind::Paren)
          throw ParseError(tok.pos, "unmatched ')'");
        std::int32_t inner = reduce(frames.back());
        frames.pop_back();
        frames.back().items.push_back(inner);
        break;
      }
      case TokKind::End: {
        close_lambdas();
        if (frames.back().kind == Frame::Kind::Paren)
          throw ParseError(frames.back().open_pos, "unclosed '('");
        std::int32_t root = reduce(frames.back());
        // Flatten the arena tree to preorder without recursion.
        std::vector<TermNode> nodes;
        nodes.reserve(arena.size());
        std::vector<std::int32_t> stack{root};
        while (!stack.empty()) {
          const AstNode& a = arena[static_cast<std::size_t>(stack.back())];
          stack.pop_back();
          nodes.push_back(TermNode{a.tag, a.succ});
          if (a.tag == TermTag::App) stack.push_back(a.right);
          if (a.tag != TermTag::Var) stack.push_back(a.left);
        }
        return Term::from_preorder(std::move(nodes));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

enum class Slot : std::uint8_t { Free, AppLeft, AppRight };

struct RenderJob {
  std::uint32_t idx;
  Slot slot;
  bool tail; // true when the term extends to the end of its enclosing group
};

void append_var(std::string& out, const TermNode& node, RenderStyle style, Slot slot) {
  if (style == RenderStyle::Integers) {
    out += std::to_string(node.succ + 1);
    return;
  }
  const bool wrap = node.succ >= 1 && slot == Slot::AppLeft;
  if (wrap) out += '(';
  out.append(static_cast<std::size_t>(node.succ), 'S');
  out += '0';
  if (wrap) out += ')';
}

} // namespace

std::string render_term(const Term& t, RenderStyle style) {
  const auto nodes = t.nodes();
  const auto ext = t.subtree_extents();
  std::string out;
  out.reserve(nodes.size() * 2);

  struct Piece {
    bool literal;
    char ch;
    RenderJob job;
  };
  std::vector<Piece> stack;
  stack.push_back({false, 0, {0, Slot::Free, true}});

  while (!stack.empty()) {
    Piece p = stack.back();
    stack.pop_back();
    if (p.literal) {
      out += p.ch;
      continue;
    }
    const RenderJob job = p.job;
    const TermNode& node = nodes[job.idx];
    switch (node.tag) {
      case TermTag::Var:
        append_var(out, node, style, job.slot);
        break;
      case TermTag::Abs: {
        const bool wrap = style == RenderStyle::Integers
                              ? (job.slot == Slot::AppLeft ||
                                 (job.slot == Slot::AppRight && !job.tail))
                              : job.slot == Slot::AppLeft;
        if (wrap) stack.push_back({true, ')', {}});
        stack.push_back({false, 0, {job.idx + 1, Slot::Free, wrap ? true : job.tail}});
        if (wrap) {
          stack.push_back({true, static_cast<char>(0xBB), {}});
          stack.push_back({true, static_cast<char>(0xCE), {}});
          stack.push_back({true, '(', {}});
        } else {
          stack.push_back({true, static_cast<char>(0xBB), {}});
          stack.push_back({true, static_cast<char>(0xCE), {}});
        }
        break;
      }
      case TermTag::App: {
        const bool wrap = style == RenderStyle::Successors || job.slot == Slot::AppRight;
        const std::uint32_t left = job.idx + 1;
        const std::uint32_t right = left + ext[left];
        const bool child_tail = wrap ? true : job.tail;
        if (wrap) stack.push_back({true, ')', {}});
        stack.push_back({false, 0, {right, Slot::AppRight, child_tail}});
        stack.push_back({true, ' ', {}});
        stack.push_back({false, 0, {left, Slot::AppLeft, false}});
        if (wrap) stack.push_back({true, '(', {}});
        break;
      }
    }
  }
  return out;
}

std::string render_term_dot(const Term& t) {
  const auto nodes = t.nodes();
  const auto ext = t.subtree_extents();
  std::string out = "digraph term {\n  node [fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"";
    switch (nodes[i].tag) {
      case TermTag::Var: out += std::to_string(nodes[i].succ + 1); break;
      case TermTag::Abs: out += "\\xce\\xbb"; break;
      case TermTag::App: out += "@"; break;
    }
    out += nodes[i].tag == TermTag::Var ? "\" shape=plaintext];\n" : "\" shape=circle];\n";
    if (nodes[i].tag == TermTag::Abs) {
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(i + 1) + ";\n";
    } else if (nodes[i].tag == TermTag::App) {
      const std::size_t left = i + 1;
      const std::size_t right = left + ext[left];
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(left) + ";\n";
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(right) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Measures and predicates

std::uint64_t term_size(const SizeSpec& spec, const Term& t) {
  std::uint64_t total = 0;
  for (const TermNode& n : t.nodes()) {
    switch (n.tag) {
      case TermTag::Var: total += spec.zero_weight() + spec.succ_weight() * n.succ; break;
      case TermTag::Abs: total += spec.abs_weight(); break;
      case TermTag::App: total += spec.app_weight(); break;
    }
  }
  return total;
}

std::uint64_t openness(const Term& t) {
  const auto nodes = t.nodes();
  const auto ext = t.subtree_extents();
  std::vector<std::uint64_t> scope_ends; // one entry per enclosing abstraction
  std::uint64_t result = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    while (!scope_ends.empty() && scope_ends.back() <= i) scope_ends.pop_back();
    if (nodes[i].tag == TermTag::Abs) {
      scope_ends.push_back(i + ext[i]);
    } else if (nodes[i].tag == TermTag::Var) {
      const std::uint64_t index = nodes[i].succ + 1;
      const std::uint64_t depth = scope_ends.size();
      if (index > depth) result = std::max(result, index - depth);
    }
  }
  return result;
}

bool is_normal_form(const Term& t) {
  const auto nodes = t.nodes();
  // In preorder the left child of an application is the next node.
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (nodes[i].tag == TermTag::App && nodes[i + 1].tag == TermTag::Abs) return false;
  return true;
}

TermMetrics term_metrics(const Term& t) {
  const auto nodes = t.nodes();
  const auto ext = t.subtree_extents();
  TermMetrics m;
  std::vector<std::uint64_t> ends;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    while (!ends.empty() && ends.back() <= i) ends.pop_back();
    m.depth = std::max(m.depth, static_cast<std::uint64_t>(ends.size()) + 1);
    switch (nodes[i].tag) {
      case TermTag::Var:
        m.variables += 1;
        m.successors += nodes[i].succ;
        break;
      case TermTag::Abs:
        m.abstractions += 1;
        ends.push_back(i + ext[i]);
        break;
      case TermTag::App:
        m.applications += 1;
        ends.push_back(i + ext[i]);
        break;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Bit codec

std::string encode_blc(const Term& t) {
  std::size_t bits = 0;
  for (const TermNode& n : t.nodes())
    bits += n.tag == TermTag::Var ? static_cast<std::size_t>(n.succ) + 2 : 2;
  std::string out;
  out.reserve(bits);
  for (const TermNode& n : t.nodes()) {
    switch (n.tag) {
      case TermTag::Abs: out += "00"; break;
      case TermTag::App: out += "01"; break;
      case TermTag::Var:
        out.append(static_cast<std::size_t>(n.succ) + 1, '1');
        out += '0';
        break;
    }
  }
  return out;
}

Term decode_blc(std::string_view bits) {
  std::size_t pos = 0;
  auto next = [&]() -> char {
    if (pos >= bits.size())
      throw DecodeError(DecodeError::Kind::Truncated, "bit string ends mid-term");
    const char c = bits[pos++];
    if (c != '0' && c != '1')
      throw DecodeError(DecodeError::Kind::BadPrefix,
                        "invalid bit character at offset " + std::to_string(pos - 1));
    return c;
  };

  TermBuilder builder;
  while (!builder.complete()) {
    if (next() == '0') {
      if (next() == '0') builder.push_abs();
      else builder.push_app();
    } else {
      std::uint64_t ones = 1;
      while (next() == '1') ++ones;
      builder.push_var(ones - 1);
    }
  }
  if (pos != bits.size())
    throw DecodeError(DecodeError::Kind::TrailingBits,
                      std::to_string(bits.size() - pos) + " bits left after a complete term");
  return builder.take();
}

void write_blc_packed(std::ostream& out, const Term& t) {
  const std::string bits = encode_blc(t);
  out << "blc " << bits.size() << "\n";
  std::uint8_t byte = 0;
  int filled = 0;
  for (char c : bits) {
    byte = static_cast<std::uint8_t>((byte << 1) | (c == '1' ? 1 : 0));
    if (++filled == 8) {
      out.put(static_cast<char>(byte));
      byte = 0;
      filled = 0;
    }
  }
  if (filled > 0) out.put(static_cast<char>(byte << (8 - filled)));
}

Term read_blc_packed(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("blc ", 0) != 0)
    throw DecodeError(DecodeError::Kind::BadPrefix, "missing 'blc <bit-count>' header");
  std::uint64_t nbits = 0;
  for (std::size_t i = 4; i < header.size(); ++i) {
    if (header[i] < '0' || header[i] > '9')
      throw DecodeError(DecodeError::Kind::BadPrefix, "malformed bit count in header");
    nbits = nbits * 10 + static_cast<std::uint64_t>(header[i] - '0');
  }
  if (header.size() == 4)
    throw DecodeError(DecodeError::Kind::BadPrefix, "malformed bit count in header");
  const std::uint64_t nbytes = (nbits + 7) / 8;
  std::string raw(nbytes, '\0');
  in.read(raw.data(), static_cast<std::streamsize>(nbytes));
  if (static_cast<std::uint64_t>(in.gcount()) != nbytes)
    throw DecodeError(DecodeError::Kind::Truncated, "packed payload shorter than header count");
  std::string bits;
  bits.reserve(nbits);
  for (std::uint64_t i = 0; i < nbits; ++i) {
    const std::uint8_t byte = static_cast<std::uint8_t>(raw[i / 8]);
    bits += (byte >> (7 - i % 8)) & 1 ? '1' : '0';
  }
  // Zero padding in the final byte is part of the format.
  for (std::uint64_t i = nbits; i < nbytes * 8; ++i) {
    const std::uint8_t byte = static_cast<std::uint8_t>(raw[i / 8]);
    if ((byte >> (7 - i % 8)) & 1)
      throw DecodeError(DecodeError::Kind::TrailingBits, "nonzero padding in final byte");
  }
  return decode_blc(bits);
}

} // namespace lterm
