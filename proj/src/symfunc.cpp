#include "klrtrace/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace klrtrace {

void Partition::normalize() {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int p : parts)
    if (p < 0) throw Error("partition: negative part");
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  Partition c;
  if (parts.empty()) return c;
  for (int row = 1; row <= parts[0]; ++row) {
    int cnt = 0;
    for (int p : parts)
      if (p >= row) ++cnt;
    c.parts.push_back(cnt);
  }
  return c;
}

std::vector<std::pair<int, int>> Partition::groups() const {
  std::vector<std::pair<int, int>> g;
  for (int p : parts) {
    if (!g.empty() && g.back().first == p)
      ++g.back().second;
    else
      g.emplace_back(p, 1);
  }
  return g;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << "]";
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  static std::map<int, std::vector<Partition>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max) {
    if (rest == 0) {
      Partition p;
      p.parts = cur;
      out.push_back(p);
      return;
    }
    for (int k = std::min(rest, max); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n == 0 ? 1 : n);
  cache[n] = out;
  return out;
}

char basis_char(SymBasis b) {
  switch (b) {
    case SymBasis::h: return 'h';
    case SymBasis::e: return 'e';
    case SymBasis::p: return 'p';
    case SymBasis::m: return 'm';
  }
  throw Error("bad basis");
}

SymBasis basis_of_char(char c) {
  switch (c) {
    case 'h': return SymBasis::h;
    case 'e': return SymBasis::e;
    case 'p': return SymBasis::p;
    case 'm': return SymBasis::m;
  }
  throw Error(std::string("bad basis char '") + c + "'");
}

namespace {

using Coeffs = std::map<Partition, Scalar>;

void coeffs_add(Coeffs& dst, const Partition& key, const Scalar& c) {
  if (c == 0) return;
  auto it = dst.find(key);
  if (it == dst.end()) {
    dst.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  }
}

Partition union_parts(const Partition& a, const Partition& b) {
  Partition u;
  u.parts = a.parts;
  u.parts.insert(u.parts.end(), b.parts.begin(), b.parts.end());
  u.normalize();
  return u;
}

// Multiplies an m-expansion of homogeneous degree s by e_r. The coefficient
// of x^gamma (gamma a fixed sorted representative) in M * e_r is the sum
// over ways to decrement r of gamma's slots by one, grouped by equal slot
// values.
Coeffs mul_m_expansion_by_er(const Coeffs& M, int r, int s) {
  Coeffs out;
  if (M.empty()) return out;
  for (const Partition& gamma : partitions_of(s + r)) {
    auto groups = gamma.groups();
    Scalar total = 0;
    std::vector<int> pick(groups.size(), 0);
    std::function<void(size_t, int, Scalar)> rec = [&](size_t gi, int rest, Scalar ways) {
      if (gi == groups.size()) {
        if (rest != 0) return;
        std::vector<int> dec;
        for (size_t k = 0; k < groups.size(); ++k) {
          for (int c = 0; c < groups[k].second - pick[k]; ++c) dec.push_back(groups[k].first);
          for (int c = 0; c < pick[k]; ++c) dec.push_back(groups[k].first - 1);
        }
        Partition pi(std::move(dec));
        auto it = M.find(pi);
        if (it != M.end()) total += ways * it->second;
        return;
      }
      int cap = std::min(groups[gi].second, rest);
      for (int k = 0; k <= cap; ++k) {
        pick[gi] = k;
        rec(gi + 1, rest - k, ways * binomial(groups[gi].second, k));
      }
      pick[gi] = 0;
    };
    rec(0, r, 1);
    coeffs_add(out, gamma, total);
  }
  return out;
}

// m-expansion of e_lambda = prod e_{lambda_i}; leading term m_{lambda'}
// with coefficient 1, all other terms dominance-lower.
const Coeffs& e_in_m(const Partition& lam) {
  static std::map<Partition, Coeffs> cache;
  auto it = cache.find(lam);
  if (it != cache.end()) return it->second;
  Coeffs out;
  if (lam.empty()) {
    out[Partition{}] = 1;
  } else {
    Partition rest;
    rest.parts.assign(lam.parts.begin() + 1, lam.parts.end());
    out = mul_m_expansion_by_er(e_in_m(rest), lam.parts[0], rest.size());
  }
  return cache.emplace(lam, std::move(out)).first->second;
}

// Coordinates in the e basis, by peeling the lex-greatest (hence
// dominance-maximal) monomial, using e_{nu'} = m_nu + lower.
Coeffs m_to_e(Coeffs m) {
  Coeffs e;
  while (!m.empty()) {
    auto lead = std::prev(m.end());
    Partition nu = lead->first;
    Scalar c = lead->second;
    Partition lam = nu.conjugate();
    for (const auto& [mu, x] : e_in_m(lam)) coeffs_add(m, mu, -c * x);
    coeffs_add(e, lam, c);
  }
  return e;
}

Coeffs e_to_m(const Coeffs& e) {
  Coeffs m;
  for (const auto& [lam, c] : e) {
    for (const auto& [mu, x] : e_in_m(lam)) coeffs_add(m, mu, c * x);
  }
  return m;
}

Coeffs convolve(const Coeffs& a, const Coeffs& b, int trunc, bool* truncated) {
  Coeffs out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) {
      if (la.size() + lb.size() > trunc) {
        if (truncated) *truncated = true;
        continue;
      }
      coeffs_add(out, union_parts(la, lb), ca * cb);
    }
  return out;
}

// One-part expansions between the multiplicative bases, by the classical
// recursions; memoized.
const Coeffs& h_in_e(int r) {
  static std::map<int, Coeffs> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  Coeffs out;
  if (r == 0) {
    out[Partition{}] = 1;
  } else {
    for (int k = 1; k <= r; ++k) {
      Scalar sgn = (k % 2 == 1) ? 1 : -1;
      for (const auto& [lam, c] : h_in_e(r - k))
        coeffs_add(out, union_parts(lam, Partition{k}), sgn * c);
    }
  }
  return cache.emplace(r, std::move(out)).first->second;
}

const Coeffs& e_in_h(int r) {
  static std::map<int, Coeffs> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  Coeffs out;
  if (r == 0) {
    out[Partition{}] = 1;
  } else {
    for (int k = 1; k <= r; ++k) {
      Scalar sgn = (k % 2 == 1) ? 1 : -1;
      for (const auto& [lam, c] : e_in_h(r - k))
        coeffs_add(out, union_parts(lam, Partition{k}), sgn * c);
    }
  }
  return cache.emplace(r, std::move(out)).first->second;
}

const Coeffs& p_in_e(int r) {
  static std::map<int, Coeffs> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  Coeffs out;
  if (r == 0) {
    out[Partition{}] = 1;
  } else {
    // p_r = sum_{k=1}^{r-1} (-1)^{k-1} e_k p_{r-k} + (-1)^{r-1} r e_r
    for (int k = 1; k < r; ++k) {
      Scalar sgn = (k % 2 == 1) ? 1 : -1;
      for (const auto& [lam, c] : p_in_e(r - k))
        coeffs_add(out, union_parts(lam, Partition{k}), sgn * c);
    }
    coeffs_add(out, Partition{r}, Scalar((r % 2 == 1) ? r : -r));
  }
  return cache.emplace(r, std::move(out)).first->second;
}

const Coeffs& e_in_p(int r) {
  static std::map<int, Coeffs> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  Coeffs out;
  if (r == 0) {
    out[Partition{}] = 1;
  } else {
    // r e_r = sum_{k=1}^{r} (-1)^{k-1} p_k e_{r-k}
    for (int k = 1; k <= r; ++k) {
      Scalar sgn = (k % 2 == 1) ? 1 : -1;
      sgn /= r;
      for (const auto& [lam, c] : e_in_p(r - k))
        coeffs_add(out, union_parts(lam, Partition{k}), sgn * c);
    }
  }
  return cache.emplace(r, std::move(out)).first->second;
}

Coeffs expand_parts(const Partition& lam, const Coeffs& (*one_part)(int), int trunc,
                    bool* truncated) {
  Coeffs acc;
  acc[Partition{}] = 1;
  for (int part : lam.parts) acc = convolve(acc, one_part(part), trunc, truncated);
  return acc;
}

}  // namespace

SymElement SymElement::one(int trunc) {
  SymElement x(trunc);
  x.m_[Partition{}] = 1;
  return x;
}

void SymElement::add_m(const Partition& lam, const Scalar& c) {
  if (lam.size() > trunc_) {
    truncated_ = true;
    return;
  }
  coeffs_add(m_, lam, c);
}

SymElement SymElement::gen(SymBasis b, int r, int trunc) {
  if (r < 0) throw Error("symfunc: negative generator index");
  SymElement x(trunc);
  if (r == 0) return one(trunc);
  switch (b) {
    case SymBasis::h:
      for (const Partition& lam : partitions_of(r)) x.add_m(lam, 1);
      break;
    case SymBasis::e:
      x.add_m(Partition(std::vector<int>(r, 1)), 1);
      break;
    case SymBasis::p:
      x.add_m(Partition{r}, 1);
      break;
    case SymBasis::m:
      throw Error("symfunc: m generators are partition-indexed, use basis_elem");
  }
  return x;
}

SymElement SymElement::basis_elem(SymBasis b, const Partition& lam, int trunc) {
  if (b == SymBasis::m) {
    SymElement x(trunc);
    x.add_m(lam, 1);
    return x;
  }
  SymElement acc = one(trunc);
  for (int part : lam.parts) acc = acc * gen(b, part, trunc);
  return acc;
}

SymElement SymElement::with_trunc(int trunc) const {
  SymElement x(trunc);
  x.truncated_ = truncated_;
  for (const auto& [lam, c] : m_) x.add_m(lam, c);
  return x;
}

SymElement SymElement::operator+(const SymElement& o) const {
  SymElement x(std::min(trunc_, o.trunc_));
  x.truncated_ = truncated_ || o.truncated_;
  for (const auto& [lam, c] : m_) x.add_m(lam, c);
  for (const auto& [lam, c] : o.m_) x.add_m(lam, c);
  return x;
}

SymElement SymElement::operator-(const SymElement& o) const {
  SymElement x(std::min(trunc_, o.trunc_));
  x.truncated_ = truncated_ || o.truncated_;
  for (const auto& [lam, c] : m_) x.add_m(lam, c);
  for (const auto& [lam, c] : o.m_) x.add_m(lam, -c);
  return x;
}

SymElement SymElement::operator*(const Scalar& c) const {
  SymElement x(trunc_);
  x.truncated_ = truncated_;
  if (c == 0) return x;
  x.m_ = m_;
  for (auto& [lam, v] : x.m_) v *= c;
  return x;
}

SymElement SymElement::operator*(const SymElement& o) const {
  SymElement x(std::min(trunc_, o.trunc_));
  x.truncated_ = truncated_ || o.truncated_;
  Coeffs prod = convolve(m_to_e(m_), m_to_e(o.m_), x.trunc_, &x.truncated_);
  for (const auto& [lam, c] : e_to_m(prod)) x.add_m(lam, c);
  return x;
}

std::map<Partition, Scalar> SymElement::in_basis(SymBasis b) const {
  switch (b) {
    case SymBasis::m: return m_;
    case SymBasis::e: return m_to_e(m_);
    case SymBasis::h: {
      Coeffs out;
      for (const auto& [lam, c] : m_to_e(m_))
        for (const auto& [mu, x] : expand_parts(lam, &e_in_h, trunc_, nullptr))
          coeffs_add(out, mu, c * x);
      return out;
    }
    case SymBasis::p: {
      Coeffs out;
      for (const auto& [lam, c] : m_to_e(m_))
        for (const auto& [mu, x] : expand_parts(lam, &e_in_p, trunc_, nullptr))
          coeffs_add(out, mu, c * x);
      return out;
    }
  }
  throw Error("bad basis");
}

SymElement SymElement::from_basis(SymBasis b, const std::map<Partition, Scalar>& coeffs,
                                  int trunc) {
  SymElement acc = zero(trunc);
  for (const auto& [lam, c] : coeffs) acc += basis_elem(b, lam, trunc) * c;
  return acc;
}

SymElement convert(const SymElement& x, SymBasis target) {
  // Round-trips through the target coordinates; exact below the truncation.
  SymElement y = SymElement::from_basis(target, x.in_basis(target), x.trunc());
  y.truncated_ = x.truncated();
  return y;
}

std::string SymElement::print(SymBasis b) const {
  auto coeffs = in_basis(b);
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : coeffs) {
    Scalar a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (lam.empty()) {
      os << rat_str(a);
      continue;
    }
    if (a != 1) os << rat_str(a) << "*";
    os << basis_char(b) << "[";
    for (size_t i = 0; i < lam.parts.size(); ++i) os << (i ? "," : "") << lam.parts[i];
    os << "]";
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;
  explicit Lexer(const std::string& str) : s(str) {}
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip();
    if (i >= s.size()) throw Error("symfunc parse: unexpected end");
    return s[i++];
  }
};

Scalar parse_number(Lexer& lx) {
  std::string num;
  while (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek()))) num += lx.get();
  if (num.empty()) throw Error("symfunc parse: expected number");
  if (lx.peek() == '/') {
    lx.get();
    num += '/';
    while (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek()))) num += lx.get();
  }
  return parse_rat(num);
}

SymElement parse_factor(Lexer& lx, int trunc) {
  char b = lx.get();
  SymBasis basis = basis_of_char(b);
  if (lx.get() != '[') throw Error("symfunc parse: expected '['");
  std::vector<int> parts;
  if (lx.peek() != ']') {
    for (;;) {
      parts.push_back(static_cast<int>(parse_number(lx).get_num().get_si()));
      char c = lx.get();
      if (c == ']') break;
      if (c != ',') throw Error("symfunc parse: expected ',' or ']'");
    }
  } else {
    lx.get();
  }
  return SymElement::basis_elem(basis, Partition(std::move(parts)), trunc);
}

}  // namespace

SymElement SymElement::parse(const std::string& text, int trunc) {
  Lexer lx(text);
  SymElement acc = zero(trunc);
  bool first = true;
  while (!lx.eof()) {
    Scalar sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.get();
      sign = (c == '-') ? -1 : 1;
    } else if (!first) {
      throw Error("symfunc parse: expected '+' or '-'");
    }
    first = false;
    SymElement term = one(trunc);
    Scalar coeff = sign;
    bool any = false;
    bool expect_factor = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      coeff *= parse_number(lx);
      any = true;
      if (lx.peek() == '*') {
        lx.get();
        expect_factor = true;
      }
    }
    while (!lx.eof()) {
      char p = lx.peek();
      if (p == 'h' || p == 'e' || p == 'p' || p == 'm') {
        term = term * parse_factor(lx, trunc);
        any = true;
        expect_factor = false;
        if (lx.peek() == '*') {
          lx.get();
          expect_factor = true;
        }
      } else {
        break;
      }
    }
    if (!any || expect_factor) throw Error("symfunc parse: empty term");
    acc += term * coeff;
  }
  if (text.empty() || (acc.is_zero() && text.find('0') == std::string::npos && first))
    throw Error("symfunc parse: empty input");
  return acc;
}

SymElement grassmannian_defect(int D) {
  if (D < 0) throw Error("grassmannian_defect: D >= 0 required");
  // Work in e coordinates throughout; h_r enters via the Wronski
  // expansion, products of e's are concatenations.
  Coeffs total;
  for (int k = 0; k <= D; ++k)
    for (int s = 0; s <= k; ++s) {
      int r = k - s;
      Scalar sgn = (s % 2 == 0) ? 1 : -1;
      for (const auto& [lam, c] : h_in_e(r)) {
        Partition key = s > 0 ? union_parts(lam, Partition{s}) : lam;
        coeffs_add(total, key, sgn * c);
      }
    }
  coeffs_add(total, Partition{}, -1);
  SymElement out(D);
  for (const auto& [lam, c] : e_to_m(total)) out.add_m(lam, c);
  return out;
}

namespace {

SymElement power_sum_form(int r, int which) {
  if (r < 1) throw Error("power_sum_via_he: r >= 1 required");
  Coeffs total;
  for (int a = 0; a <= r; ++a) {
    int b = r - a;
    Scalar coeff;
    switch (which) {
      case 1: coeff = a + 1; break;           // sum (a+1) h_a (-1)^b e_b
      case 2: coeff = -Scalar(b + 1); break;  // -sum (b+1) h_a (-1)^b e_b
      case 3: coeff = -Scalar(b); break;      // -sum over (h_a, e_b) of b ... see below
      default: throw Error("bad form");
    }
    if (b % 2 == 1) coeff = -coeff;
    for (const auto& [lam, c] : h_in_e(a)) {
      Partition key = b > 0 ? union_parts(lam, Partition{b}) : lam;
      coeffs_add(total, key, coeff * c);
    }
  }
  SymElement out(r);
  for (const auto& [lam, c] : e_to_m(total)) out.add_m(lam, c);
  return out;
}

}  // namespace

SymElement power_sum_via_he(int r) { return power_sum_form(r, 1); }
SymElement power_sum_via_he_form2(int r) { return power_sum_form(r, 2); }
// -sum_{a+b=r} a [cw spade+b][ccw spade+a]: relabeling the summation index
// so the clockwise part is h_a, this is -sum_{a+b=r} b (-1)^b h_a e_b.
SymElement power_sum_via_he_form3(int r) { return power_sum_form(r, 3); }

}  // namespace klrtrace
