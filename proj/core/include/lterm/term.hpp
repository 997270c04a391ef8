#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lterm/errors.hpp"
#include "lterm/size_model.hpp"

namespace lterm {

enum class TermTag : std::uint8_t { Var, Abs, App };

struct TermNode {
  TermTag tag;
  std::uint64_t succ; // successor count for Var (De Bruijn index = succ + 1); 0 otherwise

  bool operator==(const TermNode&) const noexcept = default;
};

/// Immutable De Bruijn term, stored as a preorder node array.
///
/// The flat layout keeps every operation iterative, so terms of depth ~10^6
/// (as produced by the sampler) are handled without recursion anywhere.
class Term {
public:
  static Term var(std::uint64_t succ);
  static Term abs(const Term& body);
  static Term app(const Term& left, const Term& right);

  // Validates that `nodes` is the preorder encoding of exactly one term.
  static Term from_preorder(std::vector<TermNode> nodes);

  std::span<const TermNode> nodes() const noexcept { return nodes_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  const TermNode& root() const { return nodes_.front(); }

  // subtree_extents()[i] = number of nodes in the subtree rooted at index i
  std::vector<std::uint32_t> subtree_extents() const;

  bool operator==(const Term&) const noexcept = default;

private:
  explicit Term(std::vector<TermNode> nodes) : nodes_(std::move(nodes)) {}
  std::vector<TermNode> nodes_;
};

/// Incremental preorder construction (decoder and sampler feed nodes in
/// preorder; `pending` tracks how many subtree slots remain open).
class TermBuilder {
public:
  void push_var(std::uint64_t succ) { push(TermTag::Var, succ); }
  void push_abs() { push(TermTag::Abs, 0); }
  void push_app() { push(TermTag::App, 0); }

  bool complete() const noexcept { return pending_ == 0 && !nodes_.empty(); }
  std::uint64_t pending() const noexcept { return pending_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  Term take();
  void reset();

private:
  void push(TermTag tag, std::uint64_t succ);
  std::vector<TermNode> nodes_;
  std::uint64_t pending_ = 1;
};

enum class RenderStyle { Integers, Successors };

// Grammar: `\` or `λ` opens an abstraction whose body extends maximally to
// the right; juxtaposition is left-associative application; parentheses
// group; a variable is either a decimal index >= 1 or a successor string
// `S...S0` (bare `0` is index 1).
Term parse_term(std::string_view text);

// Inverse of parse_term for the chosen style.
std::string render_term(const Term& t, RenderStyle style = RenderStyle::Integers);

// Graphviz rendering of the term tree; variables are labeled with indices.
std::string render_term_dot(const Term& t);

std::uint64_t term_size(const SizeSpec& spec, const Term& t);

// Minimal m such that the term is m-open; 0 means closed.
std::uint64_t openness(const Term& t);

// True iff no subterm is an application whose left part is an abstraction.
bool is_normal_form(const Term& t);

struct TermMetrics {
  std::uint64_t abstractions = 0;
  std::uint64_t applications = 0;
  std::uint64_t variables = 0; // leaf count
  std::uint64_t successors = 0;
  std::uint64_t depth = 0;

  bool operator==(const TermMetrics&) const noexcept = default;
};

TermMetrics term_metrics(const Term& t);

// Bit encoding: abstraction "00", application "01", index n as n ones and a
// zero. The bit length of the encoding equals the term size under the
// binary preset.
std::string encode_blc(const Term& t);
Term decode_blc(std::string_view bits);

// Packed file form: one header line "blc <bit-count>", then the bits
// MSB-first, final partial byte zero-padded.
void write_blc_packed(std::ostream& out, const Term& t);
Term read_blc_packed(std::istream& in);

} // namespace lterm
