#include "klrtrace/klr.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace klrtrace {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = i;
  return p;
}

Perm Perm::after(const Perm& first) const {
  Perm p;
  p.img.resize(n());
  for (int k = 0; k < n(); ++k) p.img[k] = img[first.img[k]];
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.img.resize(n());
  for (int k = 0; k < n(); ++k) p.img[img[k]] = k;
  return p;
}

int Perm::length() const {
  int inv = 0;
  for (int k = 0; k < n(); ++k)
    for (int l = k + 1; l < n(); ++l)
      if (img[k] > img[l]) ++inv;
  return inv;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = Perm::identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.img.begin(), p.img.end()));
  return out;
}

std::vector<int> canonical_word(const Perm& w) {
  std::vector<int> word;
  Perm cur = w;
  for (;;) {
    int r = -1;
    for (int k = 0; k + 1 < cur.n(); ++k)
      if (cur.img[k] > cur.img[k + 1]) {
        r = k;
        break;
      }
    if (r < 0) break;
    word.push_back(r);
    std::swap(cur.img[r], cur.img[r + 1]);  // cur = cur o s_r
  }
  return word;
}

Perm perm_of_word(const std::vector<int>& word, int n) {
  Perm p = Perm::identity(n);
  for (int r : word) {
    // apply s_r on top: new(k) = s_r(p(k))
    for (int k = 0; k < n; ++k) {
      if (p.img[k] == r)
        p.img[k] = r + 1;
      else if (p.img[k] == r + 1)
        p.img[k] = r;
    }
  }
  return p;
}

Seq apply_perm(const Perm& w, const Seq& seq) {
  Seq out(seq.size());
  for (size_t k = 0; k < seq.size(); ++k) out[w.img[k]] = seq[k];
  return out;
}

std::vector<Seq> sequences_of_content(const std::vector<int>& content) {
  Seq base;
  for (size_t i = 0; i < content.size(); ++i)
    for (int c = 0; c < content[i]; ++c) base.push_back(static_cast<int>(i));
  std::vector<Seq> out;
  std::sort(base.begin(), base.end());
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<int> content_of(const Seq& seq, int num_nodes) {
  std::vector<int> c(num_nodes, 0);
  for (int i : seq) c[i]++;
  return c;
}

int Diagram::degree(const CartanDatum& datum) const {
  int deg = 0;
  for (int d : dots) deg += 2 * d;
  for (int k = 0; k < w.n(); ++k)
    for (int l = k + 1; l < w.n(); ++l)
      if (w.img[k] > w.img[l]) deg -= datum.a(src[k], src[l]);
  return deg;
}

bool Diagram::operator<(const Diagram& o) const {
  if (src != o.src) return src < o.src;
  if (!(w == o.w)) return w < o.w;
  return dots < o.dots;
}

bool diagram_graded_lex_less(const Diagram& a, const Diagram& b) {
  int la = a.w.length(), lb = b.w.length();
  if (la != lb) return la < lb;
  if (!(a.w == b.w)) return a.w < b.w;
  if (a.dots != b.dots) return a.dots < b.dots;
  return a.src < b.src;
}

namespace {

struct Task {
  Scalar coeff;
  std::vector<Letter> letters;
};

// Single concatenation-move on pure crossing words; used for the reduced
// word graph walk.
struct Move {
  enum Kind { Commute, Braid } kind;
  int at;  // letter index (bottom-up)
};

std::vector<std::vector<int>> neighbors_with_moves(const std::vector<int>& word,
                                                   std::vector<Move>* moves) {
  std::vector<std::vector<int>> out;
  for (size_t h = 0; h + 1 < word.size(); ++h) {
    if (std::abs(word[h] - word[h + 1]) >= 2) {
      auto w2 = word;
      std::swap(w2[h], w2[h + 1]);
      out.push_back(std::move(w2));
      if (moves) moves->push_back({Move::Commute, static_cast<int>(h)});
    }
  }
  for (size_t h = 0; h + 2 < word.size(); ++h) {
    if (word[h] == word[h + 2] && std::abs(word[h] - word[h + 1]) == 1) {
      auto w2 = word;  // (a,b,a) -> (b,a,b)
      w2[h] = word[h + 1];
      w2[h + 1] = word[h];
      w2[h + 2] = word[h + 1];
      out.push_back(std::move(w2));
      if (moves) moves->push_back({Move::Braid, static_cast<int>(h)});
    }
  }
  return out;
}

// Breadth-first path between two reduced words of the same permutation in
// the commutation/braid move graph (Matsumoto: always connected).
std::vector<Move> word_path(const std::vector<int>& from, const std::vector<int>& to) {
  if (from == to) return {};
  std::map<std::vector<int>, std::pair<std::vector<int>, Move>> parent;
  std::queue<std::vector<int>> q;
  q.push(from);
  parent[from] = {from, Move{Move::Commute, -1}};
  while (!q.empty()) {
    auto cur = q.front();
    q.pop();
    std::vector<Move> moves;
    auto nbrs = neighbors_with_moves(cur, &moves);
    for (size_t k = 0; k < nbrs.size(); ++k) {
      if (parent.count(nbrs[k])) continue;
      parent[nbrs[k]] = {cur, moves[k]};
      if (nbrs[k] == to) {
        std::vector<Move> path;
        std::vector<int> at = to;
        while (!(at == from)) {
          auto& [prev, mv] = parent[at];
          path.push_back(mv);
          at = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push(nbrs[k]);
    }
  }
  throw Error("klr: reduced word graph disconnected (internal error)");
}

class Rewriter {
 public:
  Rewriter(const KLRContextPtr& ctx, const Seq& src) : ctx_(ctx), src_(src) {}

  std::map<Diagram, Scalar> run(Scalar coeff, std::vector<Letter> letters) {
    work_.push_back({std::move(coeff), std::move(letters)});
    while (!work_.empty()) {
      Task t = std::move(work_.back());
      work_.pop_back();
      if (t.coeff == 0) continue;
      step(std::move(t));
    }
    return std::move(out_);
  }

 private:
  KLRContextPtr ctx_;
  Seq src_;
  std::deque<Task> work_;
  std::map<Diagram, Scalar> out_;

  int a(int i, int j) const { return ctx_->datum.a(i, j); }
  const Scalar& t(int i, int j) const { return ctx_->scalars.t(i, j); }

  // Sequence at the height just below letter index h.
  Seq seq_below(const std::vector<Letter>& letters, size_t h) const {
    Seq s = src_;
    for (size_t k = 0; k < h; ++k)
      if (letters[k].kind == Letter::Cross) std::swap(s[letters[k].pos], s[letters[k].pos + 1]);
    return s;
  }

  void push(Scalar coeff, std::vector<Letter> letters) {
    if (coeff != 0) work_.push_back({std::move(coeff), std::move(letters)});
  }

  void step(Task task) {
    auto& L = task.letters;
    // Dot descent: lowest (cross, dot) adjacency.
    for (size_t h = 0; h + 1 < L.size(); ++h) {
      if (L[h].kind != Letter::Cross || L[h + 1].kind != Letter::Dot) continue;
      int r = L[h].pos, k = L[h + 1].pos;
      if (k != r && k != r + 1) {
        std::swap(L[h], L[h + 1]);
        push(std::move(task.coeff), std::move(L));
        return;
      }
      Seq below = seq_below(L, h);
      bool equal_colors = below[r] == below[r + 1];
      // y_{r} psi_r = psi_r y_{r+1} + 1 and y_{r+1} psi_r = psi_r y_r - 1
      // when the crossed colors agree; dots pass freely otherwise.
      std::vector<Letter> corr(L.begin(), L.end());
      corr.erase(corr.begin() + h, corr.begin() + h + 2);
      L[h] = Letter{Letter::Dot, k == r ? r + 1 : r};
      L[h + 1] = Letter{Letter::Cross, r};
      if (equal_colors) {
        Scalar c = task.coeff;
        push(std::move(task.coeff), std::move(L));
        push(k == r ? c : -c, std::move(corr));
      } else {
        push(std::move(task.coeff), std::move(L));
      }
      return;
    }

    // All dots now sit below all crossings.
    std::vector<int> dots(src_.size(), 0);
    std::vector<int> word;
    for (const auto& l : L) {
      if (l.kind == Letter::Dot)
        dots[l.pos]++;
      else
        word.push_back(l.pos);
    }

    Perm w = perm_of_word(word, static_cast<int>(src_.size()));
    if (static_cast<int>(word.size()) == w.length()) {
      emit_reduced(task.coeff, dots, word, w);
      return;
    }

    // Non-reduced: locate the first letter that drops the length, expose a
    // double crossing there, and apply the quadratic relation.
    Perm u = Perm::identity(static_cast<int>(src_.size()));
    size_t p = 0;
    int len = 0;
    for (; p < word.size(); ++p) {
      Perm nxt = perm_of_word({word[p]}, u.n()).after(u);
      if (nxt.length() < len) break;
      len = nxt.length();
      u = nxt;
    }
    int c = word[p];
    // u has a reduced word with top letter c; route the prefix there.
    Perm u_short = perm_of_word({c}, u.n()).after(u);  // s_c o u
    std::vector<int> prefix(word.begin(), word.begin() + p);
    std::vector<int> target = canonical_word(u_short);
    target.push_back(c);
    std::vector<int> rest(word.begin() + p + 1, word.end());
    std::vector<int> above{c};
    above.insert(above.end(), rest.begin(), rest.end());

    std::vector<int> cur = prefix;
    Scalar coeff = task.coeff;
    for (const Move& mv : word_path(prefix, target)) replay(mv, cur, coeff, dots, above);
    if (cur != target) throw Error("klr: word routing failed (internal error)");

    // cur == target; the word now reads target ++ [c] ++ rest with a
    // double crossing (c, c) on top of canonical(u_short).
    Seq below = apply_perm(u_short, src_);
    int i = below[c], j = below[c + 1];
    std::vector<int> base = canonical_word(u_short);
    if (i == j) return;  // psi^2 = 0 on equal colors
    if (a(i, j) == 0) {
      rebuild(coeff * t(i, j), dots, base, {}, rest);
    } else {
      rebuild(coeff * t(i, j), dots, base, {Letter{Letter::Dot, c}}, rest);
      rebuild(coeff * t(j, i), dots, base, {Letter{Letter::Dot, c + 1}}, rest);
    }
  }

  // Reduced crossing word: walk to the canonical word, spinning off braid
  // corrections, then record the basis term.
  void emit_reduced(Scalar coeff, const std::vector<int>& dots, std::vector<int> word,
                    const Perm& w) {
    std::vector<int> target = canonical_word(w);
    std::vector<int> cur = word;
    for (const Move& mv : word_path(word, target)) replay(mv, cur, coeff, dots, {});
    Diagram d{src_, w, dots};
    auto it = out_.find(d);
    if (it == out_.end()) {
      if (coeff != 0) out_.emplace(std::move(d), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) out_.erase(it);
    }
  }

  // Applies one move to cur (in place); for hard braids pushes the
  // correction task. `rest` are crossing letters sitting above cur.
  void replay(const Move& mv, std::vector<int>& cur, const Scalar& coeff,
              const std::vector<int>& dots, const std::vector<int>& rest) {
    if (mv.kind == Move::Commute) {
      std::swap(cur[mv.at], cur[mv.at + 1]);
      return;
    }
    int h = mv.at;
    int m = std::min(cur[h], cur[h + 1]);
    Seq below = src_;  // dots do not affect colors
    for (int k = 0; k < h; ++k) std::swap(below[cur[k]], below[cur[k] + 1]);
    int outer1 = below[m], mid = below[m + 1], outer2 = below[m + 2];
    bool hard = outer1 == outer2 && a(outer1, mid) == -1;
    bool lower_first = cur[h] < cur[h + 1];  // pattern (r, r+1, r)
    if (hard) {
      // psi[r,r+1,r] = psi[r+1,r,r+1] + t_{ij} with bottom colors (i,j,i).
      Scalar corr = coeff * t(outer1, mid);
      if (!lower_first) corr = -corr;
      std::vector<int> shorter(cur.begin(), cur.begin() + h);
      shorter.insert(shorter.end(), cur.begin() + h + 3, cur.end());
      shorter.insert(shorter.end(), rest.begin(), rest.end());
      rebuild(std::move(corr), dots, shorter, {}, {});
    }
    int a0 = cur[h], b0 = cur[h + 1];  // (a,b,a) -> (b,a,b)
    cur[h] = b0;
    cur[h + 1] = a0;
    cur[h + 2] = b0;
  }

  void rebuild(Scalar coeff, const std::vector<int>& dots, const std::vector<int>& word,
               const std::vector<Letter>& mid, const std::vector<int>& rest) {
    std::vector<Letter> letters;
    for (size_t k = 0; k < dots.size(); ++k)
      for (int c = 0; c < dots[k]; ++c) letters.push_back({Letter::Dot, static_cast<int>(k)});
    for (int r : word) letters.push_back({Letter::Cross, r});
    letters.insert(letters.end(), mid.begin(), mid.end());
    for (int r : rest) letters.push_back({Letter::Cross, r});
    push(std::move(coeff), std::move(letters));
  }
};

}  // namespace

KLRElement normalize_word(KLRContextPtr ctx, const Seq& src, const std::vector<Letter>& letters,
                          const Scalar& coeff) {
  KLRElement out(ctx, static_cast<int>(src.size()));
  Rewriter rw(ctx, src);
  for (auto& [d, c] : rw.run(coeff, letters)) out.add_term(d, c);
  return out;
}

void KLRElement::add_term(const Diagram& d, const Scalar& c) {
  if (c == 0) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

KLRElement KLRElement::idempotent(KLRContextPtr ctx, const Seq& seq) {
  KLRElement x(ctx, static_cast<int>(seq.size()));
  x.add_term(Diagram{seq, Perm::identity(static_cast<int>(seq.size())),
                     std::vector<int>(seq.size(), 0)},
             1);
  return x;
}

KLRElement KLRElement::unit(KLRContextPtr ctx, const std::vector<int>& content) {
  int n = 0;
  for (int c : content) n += c;
  KLRElement x(ctx, n);
  for (const Seq& s : sequences_of_content(content))
    x.add_term(Diagram{s, Perm::identity(n), std::vector<int>(n, 0)}, 1);
  return x;
}

KLRElement KLRElement::dot(KLRContextPtr ctx, const Seq& seq, int pos, int power) {
  KLRElement x(ctx, static_cast<int>(seq.size()));
  auto dots = std::vector<int>(seq.size(), 0);
  dots[pos] = power;
  x.add_term(Diagram{seq, Perm::identity(static_cast<int>(seq.size())), dots}, 1);
  return x;
}

KLRElement KLRElement::crossing(KLRContextPtr ctx, const Seq& seq, int pos) {
  std::vector<int> word{pos};
  KLRElement x(ctx, static_cast<int>(seq.size()));
  x.add_term(Diagram{seq, perm_of_word(word, static_cast<int>(seq.size())),
                     std::vector<int>(seq.size(), 0)},
             1);
  return x;
}

KLRElement KLRElement::from_diagram(KLRContextPtr ctx, const Diagram& d, Scalar coeff) {
  KLRElement x(ctx, static_cast<int>(d.src.size()));
  x.add_term(d, coeff);
  return x;
}

KLRElement KLRElement::operator+(const KLRElement& o) const {
  KLRElement x = *this;
  for (const auto& [d, c] : o.terms_) x.add_term(d, c);
  return x;
}

KLRElement KLRElement::operator-(const KLRElement& o) const {
  KLRElement x = *this;
  for (const auto& [d, c] : o.terms_) x.add_term(d, -c);
  return x;
}

KLRElement KLRElement::operator*(const Scalar& c) const {
  KLRElement x(ctx_, n_);
  if (c == 0) return x;
  for (const auto& [d, v] : terms_) x.add_term(d, v * c);
  return x;
}

KLRElement KLRElement::operator*(const KLRElement& o) const {
  if (ctx_->canonical_text() != o.ctx_->canonical_text() || n_ != o.n_)
    throw Error("klr: context mismatch in product");
  KLRElement x(ctx_, n_);
  for (const auto& [db, cb] : o.terms_) {
    Seq top = db.tgt();
    for (const auto& [da, ca] : terms_) {
      if (da.src != top) continue;
      std::vector<Letter> letters;
      for (size_t k = 0; k < db.dots.size(); ++k)
        for (int c = 0; c < db.dots[k]; ++c) letters.push_back({Letter::Dot, static_cast<int>(k)});
      for (int r : canonical_word(db.w)) letters.push_back({Letter::Cross, r});
      for (size_t k = 0; k < da.dots.size(); ++k)
        for (int c = 0; c < da.dots[k]; ++c) letters.push_back({Letter::Dot, static_cast<int>(k)});
      for (int r : canonical_word(da.w)) letters.push_back({Letter::Cross, r});
      Rewriter rw(ctx_, db.src);
      for (auto& [d, c] : rw.run(ca * cb, letters)) x.add_term(d, c);
    }
  }
  return x;
}

int KLRElement::degree() const {
  if (terms_.empty()) throw Error("klr: degree of zero element");
  int deg = terms_.begin()->first.degree(ctx_->datum);
  for (const auto& [d, c] : terms_)
    if (d.degree(ctx_->datum) != deg) throw Error("klr: inhomogeneous element");
  return deg;
}

bool KLRElement::homogeneous() const {
  if (terms_.empty()) return true;
  int deg = terms_.begin()->first.degree(ctx_->datum);
  for (const auto& [d, c] : terms_)
    if (d.degree(ctx_->datum) != deg) return false;
  return true;
}

std::string KLRElement::print() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
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
    if (a != 1) os << rat_str(a) << " * ";
    bool printed = false;
    auto word = canonical_word(d.w);
    if (!word.empty()) {
      os << "psi[";
      for (size_t k = 0; k < word.size(); ++k) os << (k ? "," : "") << word[k] + 1;
      os << "] ";
      printed = true;
    }
    bool any_dot = false;
    for (int x : d.dots) any_dot |= x > 0;
    if (any_dot) {
      os << "y[";
      for (size_t k = 0; k < d.dots.size(); ++k) os << (k ? "," : "") << d.dots[k];
      os << "] ";
      printed = true;
    }
    (void)printed;
    os << "e(";
    for (size_t k = 0; k < d.src.size(); ++k)
      os << (k ? "," : "") << ctx_->datum.name(d.src[k]);
    os << ")";
  }
  return os.str();
}

KLRElement KLRElement::parse(KLRContextPtr ctx, const std::string& text, int strands) {
  KLRElement acc(ctx, strands);
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) throw Error("klr parse: expected '" + std::string(1, c) + "'");
    ++i;
  };
  auto read_int_list = [&](char open, char close) {
    expect(open);
    std::vector<int> xs;
    skip();
    if (i < text.size() && text[i] == close) {
      ++i;
      return xs;
    }
    for (;;) {
      skip();
      size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '-'))
        ++j;
      if (j == i) throw Error("klr parse: expected integer");
      xs.push_back(std::stoi(text.substr(i, j - i)));
      i = j;
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(close);
      return xs;
    }
  };

  bool first = true;
  for (;;) {
    skip();
    if (i >= text.size()) break;
    Scalar sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw Error("klr parse: expected sign");
    }
    first = false;
    Scalar coeff = sign;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
        ++j;
      coeff *= parse_rat(text.substr(i, j - i));
      i = j;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    std::vector<int> word;
    std::vector<int> dots(strands, 0);
    if (text.compare(i, 4, "psi[") == 0) {
      i += 3;
      for (int x : read_int_list('[', ']')) word.push_back(x - 1);
      skip();
    }
    if (text.compare(i, 2, "y[") == 0) {
      i += 1;
      auto xs = read_int_list('[', ']');
      if (static_cast<int>(xs.size()) != strands) throw Error("klr parse: y[] arity");
      dots = xs;
      skip();
    }
    if (text.compare(i, 2, "e(") != 0) throw Error("klr parse: expected e(...)");
    i += 1;
    expect('(');
    Seq seq;
    for (;;) {
      skip();
      size_t j = i;
      while (j < text.size() && text[j] != ',' && text[j] != ')') ++j;
      std::string name = text.substr(i, j - i);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      seq.push_back(ctx->datum.index_of(name));
      i = j;
      skip();
      if (text[i] == ',') {
        ++i;
        continue;
      }
      expect(')');
      break;
    }
    if (static_cast<int>(seq.size()) != strands) throw Error("klr parse: e() arity");
    Perm w = perm_of_word(word, strands);
    if (canonical_word(w) != word) throw Error("klr parse: psi word not canonical");
    acc.add_term(Diagram{seq, w, dots}, coeff);
  }
  return acc;
}

std::vector<Diagram> graded_piece(const KLRContextPtr& ctx, const std::vector<int>& content,
                                  int degree) {
  int n = 0;
  for (int c : content) n += c;
  std::vector<Diagram> out;
  auto seqs = sequences_of_content(content);
  auto perms = all_perms(n);
  for (const Seq& s : seqs)
    for (const Perm& w : perms) {
      Diagram base{s, w, std::vector<int>(n, 0)};
      int cross_deg = base.degree(ctx->datum);
      int need = degree - cross_deg;
      if (need < 0 || need % 2 != 0) continue;
      int total = need / 2;
      // enumerate dot vectors with the given sum
      std::vector<int> dots(n, 0);
      std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == n - 1 || n == 0) {
          if (n > 0) dots[pos] = rest;
          out.push_back(Diagram{s, w, dots});
          return;
        }
        for (int k = 0; k <= rest; ++k) {
          dots[pos] = k;
          rec(pos + 1, rest - k);
        }
        dots[pos] = 0;
      };
      if (n == 0) {
        if (need == 0) out.push_back(base);
      } else {
        rec(0, total);
      }
    }
  std::sort(out.begin(), out.end(), diagram_graded_lex_less);
  return out;
}

int degree_floor(const KLRContextPtr& ctx, const std::vector<int>& content) {
  int n = 0;
  for (int c : content) n += c;
  int best = 0;
  for (const Seq& s : sequences_of_content(content))
    for (const Perm& w : all_perms(n)) {
      Diagram d{s, w, std::vector<int>(n, 0)};
      best = std::min(best, d.degree(ctx->datum));
    }
  return best;
}

int max_dotless_degree(const KLRContextPtr& ctx, const std::vector<int>& content) {
  int n = 0;
  for (int c : content) n += c;
  int best = 0;
  for (const Seq& s : sequences_of_content(content))
    for (const Perm& w : all_perms(n)) {
      Diagram d{s, w, std::vector<int>(n, 0)};
      best = std::max(best, d.degree(ctx->datum));
    }
  return best;
}

KLRElement nilhecke_idempotent(const KLRContextPtr& ctx, int n) {
  if (ctx->datum.size() != 1) throw Error("nilhecke_idempotent: single-node datum required");
  if (n < 1) throw Error("nilhecke_idempotent: n >= 1 required");
  Seq src(n, 0);
  Perm w0 = Perm::identity(n);
  std::reverse(w0.img.begin(), w0.img.end());
  std::vector<Letter> letters;
  for (int r : canonical_word(w0)) letters.push_back({Letter::Cross, r});
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < n - 1 - k; ++c) letters.push_back({Letter::Dot, k});
  return normalize_word(ctx, src, letters);
}

KLRElement divided_power_class_rep(const KLRContextPtr& ctx, int n, int r) {
  if (ctx->datum.size() != 1) throw Error("divided_power_class_rep: single-node datum required");
  KLRElement e = nilhecke_idempotent(ctx, n);
  Seq src(n, 0);
  std::vector<Letter> letters;
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < r; ++c) letters.push_back({Letter::Dot, k});
  KLRElement dots = normalize_word(ctx, src, letters);
  return dots * e;
}

}  // namespace klrtrace
