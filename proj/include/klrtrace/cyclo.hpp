#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klrtrace/klr.hpp"
#include "klrtrace/linalg.hpp"

namespace klrtrace {

// Finite-dimensional graded algebra given by structure constants.
struct GradedAlgebra {
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<std::vector<SparseVec>> mult;  // mult[i][j] = coords of b_i * b_j
  std::vector<SparseVec> unit_idempotents;   // orthogonal, summing to 1

  int dim() const { return static_cast<int>(degrees.size()); }
  std::map<int, int> graded_dims() const;
  SparseVec one() const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  // Exhaustive for dim <= threshold, seeded random triples beyond.
  void check_associativity(int threshold = 24, int samples = 400) const;
};

// Constructs a GradedAlgebra from explicit generated data (used for direct
// examples like matrix algebras in tests and for deserialized caches).
GradedAlgebra matrix_algebra(int n);

struct StabilizationFailure {
  int scanned_up_to;
  std::map<int, int> partial_quotient_dims;
};

// Cyclotomic quotient R^lambda_nu computed degree by degree from the free
// KLR algebra. Keeps the per-degree reduction data so free elements can be
// pushed into the quotient.
class CycloAlgebra {
 public:
  CycloAlgebra(KLRContextPtr ctx, Weight lambda, std::vector<int> content, int dmax = 60,
               int stab_window = 4);

  const GradedAlgebra& algebra() const { return algebra_; }
  const KLRContextPtr& context() const { return ctx_; }
  const Weight& lambda() const { return lambda_; }
  const std::vector<int>& content() const { return content_; }
  int strands() const { return strands_; }
  int dim() const { return algebra_.dim(); }
  int top_degree() const { return top_degree_; }

  // Free representative of a quotient basis vector.
  const Diagram& rep(int k) const { return reps_[k]; }
  KLRElement rep_element(int k) const { return KLRElement::from_diagram(ctx_, reps_[k]); }

  // Image of a free element in quotient coordinates.
  SparseVec reduce(const KLRElement& x) const;
  SparseVec reduce_diagram(const Diagram& d, const Scalar& coeff) const;

  // Coordinates of e(seq) in the quotient.
  SparseVec idempotent_coords(const Seq& seq) const;

 private:
  struct DegreeData {
    std::vector<Diagram> basis;          // graded-lex order
    std::map<Diagram, int> index;        // diagram -> local column
    RowSpace ideal;                      // echelon span of the ideal piece
    std::vector<int> quotient_cols;      // non-pivot columns
    std::map<int, int> global_of_local;  // local column -> global basis index
  };

  KLRContextPtr ctx_;
  Weight lambda_;
  std::vector<int> content_;
  int strands_;
  int floor_ = 0;
  int top_degree_ = 0;     // top nonzero quotient degree
  int scanned_up_to_ = 0;  // ideal data available through this degree
  int max_dotless_ = 0;
  std::map<int, DegreeData> by_degree_;
  std::vector<Diagram> reps_;
  GradedAlgebra algebra_;

  void build(int dmax, int stab_window);
};

// The non-unital algebra map R^lambda_nu -> R^lambda_{nu+alpha_i} appending
// an i-colored strand on the right, expressed in the computed bases.
Matrix induction_embedding(const CycloAlgebra& from, const CycloAlgebra& to, int node);
// Appends an i-strand to a free diagram.
Diagram append_strand(const Diagram& d, int node);

// y_last^r (1 (x) e(i)) in the quotient holding the extra strand.
SparseVec appended_dot(const CycloAlgebra& to, int node, int r,
                       const std::vector<int>& from_content);

}  // namespace klrtrace
