#pragma once

#include <memory>
#include <map>
#include <string>
#include <vector>

#include "klrtrace/cartan.hpp"
#include "klrtrace/scalar.hpp"

namespace klrtrace {

// Permutation of 0..n-1, one-line notation: img[k] is where bottom
// position k ends up.
struct Perm {
  std::vector<int> img;

  static Perm identity(int n);
  int n() const { return static_cast<int>(img.size()); }
  int operator()(int k) const { return img[k]; }
  Perm after(const Perm& first) const;  // this o first
  Perm inverse() const;
  int length() const;  // inversions
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

std::vector<Perm> all_perms(int n);
// Lexicographically smallest reduced word, read bottom-up (letter k means
// the simple crossing of positions k, k+1; 0-based).
std::vector<int> canonical_word(const Perm& w);
Perm perm_of_word(const std::vector<int>& word, int n);

// Sequence of node colors (bottom to top reading is left to right).
using Seq = std::vector<int>;
Seq apply_perm(const Perm& w, const Seq& seq);
// All sequences with the given content (content[i] = number of i-strands).
std::vector<Seq> sequences_of_content(const std::vector<int>& content);
std::vector<int> content_of(const Seq& seq, int num_nodes);

// Shared algebra context for KLR elements.
struct KLRContext {
  CartanDatum datum;
  ScalarChoice scalars;

  KLRContext(CartanDatum d, ScalarChoice q) : datum(std::move(d)), scalars(std::move(q)) {
    scalars.validate(datum);
  }
  std::string canonical_text() const {
    return datum.canonical_text() + "|" + scalars.canonical_text();
  }
};

using KLRContextPtr = std::shared_ptr<const KLRContext>;

// Basis diagram psi_w y^dots e(src): dots below all crossings, crossings
// along the canonical reduced word of w.
struct Diagram {
  Seq src;
  Perm w;
  std::vector<int> dots;

  Seq tgt() const { return apply_perm(w, src); }
  int degree(const CartanDatum& datum) const;
  bool operator<(const Diagram& o) const;
  bool operator==(const Diagram& o) const { return src == o.src && w == o.w && dots == o.dots; }
};

// Deterministic basis order used for row-reduction pivoting: by crossing
// count, then word, dots, and source sequence.
bool diagram_graded_lex_less(const Diagram& a, const Diagram& b);

// Exact linear combination of basis diagrams of a fixed weight.
class KLRElement {
 public:
  KLRElement(KLRContextPtr ctx, int strands) : ctx_(std::move(ctx)), n_(strands) {}

  static KLRElement idempotent(KLRContextPtr ctx, const Seq& seq);
  // Identity of R_nu: sum of e(i) over all sequences of the content.
  static KLRElement unit(KLRContextPtr ctx, const std::vector<int>& content);
  static KLRElement dot(KLRContextPtr ctx, const Seq& seq, int pos, int power = 1);
  static KLRElement crossing(KLRContextPtr ctx, const Seq& seq, int pos);
  static KLRElement from_diagram(KLRContextPtr ctx, const Diagram& d, Scalar coeff = 1);

  const KLRContextPtr& context() const { return ctx_; }
  int strands() const { return n_; }
  const std::map<Diagram, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  KLRElement operator+(const KLRElement& o) const;
  KLRElement operator-(const KLRElement& o) const;
  KLRElement operator*(const Scalar& c) const;
  KLRElement operator*(const KLRElement& o) const;  // this stacked on top of o
  bool operator==(const KLRElement& o) const { return terms_ == o.terms_; }

  // Degree of a homogeneous element; throws if mixed.
  int degree() const;
  bool homogeneous() const;

  std::string print() const;
  static KLRElement parse(KLRContextPtr ctx, const std::string& text, int strands);

  void add_term(const Diagram& d, const Scalar& c);

 private:
  KLRContextPtr ctx_;
  int n_;
  std::map<Diagram, Scalar> terms_;
};

// Internal rewriting entry point, exposed for the confluence tests: a word
// of generators (bottom-up) over e(src) is brought to normal form.
struct Letter {
  enum Kind { Dot, Cross } kind;
  int pos;
  bool operator==(const Letter& o) const { return kind == o.kind && pos == o.pos; }
};
KLRElement normalize_word(KLRContextPtr ctx, const Seq& src, const std::vector<Letter>& letters,
                          const Scalar& coeff = 1);

// Complete list of basis diagrams of the given content and degree.
std::vector<Diagram> graded_piece(const KLRContextPtr& ctx, const std::vector<int>& content,
                                  int degree);
// Least degree of any diagram of the content (dots only raise degree).
int degree_floor(const KLRContextPtr& ctx, const std::vector<int>& content);
// Largest degree of a dotless diagram of the content.
int max_dotless_degree(const KLRContextPtr& ctx, const std::vector<int>& content);

// Primitive idempotent e_n = y^delta psi_{w0} of the nilHecke algebra on n
// strands, delta = (n-1, ..., 1, 0). Single-node context required.
KLRElement nilhecke_idempotent(const KLRContextPtr& ctx, int n);
// y_1^r ... y_n^r e_n, whose trace class represents the divided power.
KLRElement divided_power_class_rep(const KLRContextPtr& ctx, int n, int r);

}  // namespace klrtrace
