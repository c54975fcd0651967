#pragma once

#include <map>
#include <string>
#include <vector>

#include "klrtrace/scalar.hpp"

namespace klrtrace {

// Integer partition, parts weakly decreasing, no zero parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { normalize(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

  void normalize();
  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  Partition conjugate() const;
  // (value, multiplicity) groups, values descending.
  std::vector<std::pair<int, int>> groups() const;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  std::string to_string() const;
};

std::vector<Partition> partitions_of(int n);

enum class SymBasis { h, e, p, m };
char basis_char(SymBasis b);
SymBasis basis_of_char(char c);

// Element of the degree-truncated ring of symmetric functions. Stored
// canonically in the monomial basis; h/e/p are views. Operations drop
// terms above the truncation degree and mark the value as truncated.
class SymElement {
 public:
  explicit SymElement(int trunc) : trunc_(trunc) {
    if (trunc < 0) throw Error("symfunc: negative truncation degree");
  }

  static SymElement zero(int trunc) { return SymElement(trunc); }
  static SymElement one(int trunc);
  // Generator h_r / e_r / p_r, or monomial basis element m_lambda.
  static SymElement gen(SymBasis b, int r, int trunc);
  static SymElement basis_elem(SymBasis b, const Partition& lam, int trunc);

  int trunc() const { return trunc_; }
  bool truncated() const { return truncated_; }
  bool is_zero() const { return m_.empty(); }
  // Replaces the truncation degree (re-truncating if lower).
  SymElement with_trunc(int trunc) const;

  const std::map<Partition, Scalar>& monomial_coeffs() const { return m_; }
  std::map<Partition, Scalar> in_basis(SymBasis b) const;
  static SymElement from_basis(SymBasis b, const std::map<Partition, Scalar>& coeffs, int trunc);

  SymElement operator+(const SymElement& o) const;
  SymElement operator-(const SymElement& o) const;
  SymElement operator*(const SymElement& o) const;
  SymElement operator*(const Scalar& c) const;
  SymElement& operator+=(const SymElement& o) { return *this = *this + o; }
  SymElement& operator-=(const SymElement& o) { return *this = *this - o; }
  bool operator==(const SymElement& o) const { return m_ == o.m_; }
  bool operator!=(const SymElement& o) const { return !(*this == o); }

  // "3*h[2] - 2*h[1]e[1] + e[2]" style. print() emits the element in the
  // given single basis; parse() accepts products of h/e/p/m factors.
  std::string print(SymBasis b) const;
  static SymElement parse(const std::string& text, int trunc);

  void add_m(const Partition& lam, const Scalar& c);

 private:
  int trunc_;
  bool truncated_ = false;
  std::map<Partition, Scalar> m_;  // monomial coordinates, no zeros

  friend SymElement convert(const SymElement&, SymBasis);
};

// Equal element expressed in the target basis (value-identical; views are
// exact below the truncation degree).
SymElement convert(const SymElement& x, SymBasis target);

// Defect of the truncated infinite Grassmannian identity
// (sum (-1)^s e_s t^s)(sum h_r t^r) = 1: returns
// sum_{k<=D} sum_{r+s=k} (-1)^s e_s h_r - 1. Must be exactly zero.
SymElement grassmannian_defect(int D);

// sum_{a+b=r} (a+1) (-1)^b h_a e_b; equals p_r. The other two coefficient
// forms of the same identity are exposed for the agreement checks.
SymElement power_sum_via_he(int r);
SymElement power_sum_via_he_form2(int r);  // -sum (b+1) (-1)^b h_a e_b
SymElement power_sum_via_he_form3(int r);  // -sum a (-1)^a h_b e_a

}  // namespace klrtrace
