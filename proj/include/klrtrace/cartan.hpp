#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "klrtrace/scalar.hpp"

namespace klrtrace {

// Simply-laced Cartan datum: a finite graph without loops or multiple
// edges, with a chosen orientation per edge. a(i,i) = 2, a(i,j) = -1 on
// edges, 0 otherwise.
class CartanDatum {
 public:
  CartanDatum(std::vector<std::string> node_names, std::vector<std::pair<int, int>> oriented_edges);

  // Path graph 1 - 2 - ... - n, oriented k -> k+1.
  static CartanDatum type_a(int n);
  static CartanDatum from_json_text(const std::string& text);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& name) const;

  int a(int i, int j) const { return cartan_[i][j]; }
  bool edge(int i, int j) const { return i != j && cartan_[i][j] == -1; }
  // true iff the edge {i,j} is oriented j -> i.
  bool oriented_into(int i, int j) const { return oriented_.count({j, i}) != 0; }
  const std::vector<std::pair<int, int>>& edges() const { return edge_list_; }

  std::string canonical_text() const;  // stable serialization for checksums

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::pair<int, int>> edge_list_;  // i < j
  std::set<std::pair<int, int>> oriented_;      // (from, to)
};

// Weight lattice element with explicit fundamental-weight and simple-root
// coordinates, so that shifts by alpha_i never require linear solves.
struct Weight {
  std::vector<long> fund;
  std::vector<long> root;

  static Weight zero(int n) { return Weight{std::vector<long>(n, 0), std::vector<long>(n, 0)}; }
  static Weight fundamental(int n, int i, long c = 1) {
    Weight w = zero(n);
    w.fund[i] = c;
    return w;
  }

  Weight plus_alpha(int i, long c = 1) const {
    Weight w = *this;
    w.root[i] += c;
    return w;
  }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight& o) const { return fund == o.fund && root == o.root; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  // Lexicographic on (fund, root); total order used for map keys and for
  // picking coset base weights deterministically.
  bool operator<(const Weight& o) const {
    if (fund != o.fund) return fund < o.fund;
    return root < o.root;
  }

  bool dominant() const {
    for (long c : fund)
      if (c < 0) return false;
    for (long c : root)
      if (c != 0) return false;
    return true;
  }

  std::string to_string() const;
};

// <h_i, lambda>
long pairing(const CartanDatum& datum, int i, const Weight& w);

// Choice of scalars Q: t_ij for i != j, t_ii = 1, t_ij = t_ji off edges.
class ScalarChoice {
 public:
  explicit ScalarChoice(int n) : t_(n, std::vector<Scalar>(n, 1)) {}

  const Scalar& t(int i, int j) const { return t_[i][j]; }
  void set_t(int i, int j, Scalar v);
  Scalar v(int i, int j) const { return t_[j][i] / t_[i][j]; }  // v_ij = t_ij^{-1} t_ji
  int size() const { return static_cast<int>(t_.size()); }
  void validate(const CartanDatum& datum) const;
  bool is_signed_choice(const CartanDatum& datum) const;  // v_ij = (-1)^{a_ij}

  std::string canonical_text() const;

 private:
  std::vector<std::vector<Scalar>> t_;
};

// t_ij = -t_ji = 1 for each oriented edge j -> i; t = 1 elsewhere. Gives
// v_ij = (-1)^{a_ij}.
ScalarChoice default_scalars(const CartanDatum& datum);

ScalarChoice scalars_from_json_text(const CartanDatum& datum, const std::string& text);

// Cyclic-pivotal scalars c^+_{i,lambda} on a finite weight window.
class PivotalScalars {
 public:
  const Scalar& cplus(int i, const Weight& w) const;
  // c^-_{i,lambda} determined by c^-_{i,lambda+alpha_i} c^+_{i,lambda} = 1.
  Scalar cminus(int i, const Weight& w) const;
  bool has(int i, const Weight& w) const;
  const std::map<std::pair<int, Weight>, Scalar>& all() const { return cplus_; }

  void set(int i, const Weight& w, Scalar c) { cplus_[{i, w}] = std::move(c); }

 private:
  std::map<std::pair<int, Weight>, Scalar> cplus_;
};

// Solves c^+_{i,lambda+alpha_j} / c^+_{i,lambda} = t_ij on the window, with
// c^+ = 1 at the lexicographically smallest weight of each root-lattice
// coset present. Throws Error naming an offending cycle if the ratios are
// inconsistent on the window.
PivotalScalars solve_pivotal(const CartanDatum& datum, const ScalarChoice& q,
                             const std::set<Weight>& window);

// Per edge {i,j}: v_ij t_ij t_ji^{-1} == 1, the identity behind cyclicity
// of the compatible pivotal structure. True by construction of v.
std::vector<std::pair<std::pair<int, int>, bool>> cyclicity_check(const CartanDatum& datum,
                                                                  const ScalarChoice& q);

}  // namespace klrtrace
