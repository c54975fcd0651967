#include "klrtrace/cartan.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace klrtrace {

CartanDatum::CartanDatum(std::vector<std::string> node_names,
                         std::vector<std::pair<int, int>> oriented_edges)
    : names_(std::move(node_names)) {
  const int n = static_cast<int>(names_.size());
  if (n == 0) throw Error("cartan: empty node set");
  {
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("cartan: duplicate node name");
  }
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  for (auto [u, v] : oriented_edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw Error("cartan: edge endpoint out of range");
    if (u == v) throw Error("cartan: loop edge");
    if (cartan_[u][v] == -1) throw Error("cartan: multi-edge");
    cartan_[u][v] = cartan_[v][u] = -1;
    edge_list_.emplace_back(std::min(u, v), std::max(u, v));
    oriented_.insert({u, v});
  }
  std::sort(edge_list_.begin(), edge_list_.end());
}

CartanDatum CartanDatum::type_a(int n) {
  if (n < 1) throw Error("type_a: n >= 1 required");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return CartanDatum(std::move(names), std::move(edges));
}

int CartanDatum::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw Error("cartan: unknown node '" + name + "'");
}

CartanDatum CartanDatum::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("cartan config: ") + e.what());
  }
  if (!j.contains("nodes") || !j["nodes"].is_array()) throw Error("cartan config: missing nodes");
  std::vector<std::string> names = j["nodes"].get<std::vector<std::string>>();

  auto find = [&](const std::string& s) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      if (names[i] == s) return i;
    throw Error("cartan config: unknown node '" + s + "'");
  };

  std::vector<std::pair<int, int>> undirected;
  if (j.contains("edges"))
    for (const auto& e : j["edges"]) undirected.emplace_back(find(e.at(0)), find(e.at(1)));

  std::set<std::pair<int, int>> oriented;
  if (j.contains("orientation"))
    for (const auto& e : j["orientation"]) oriented.insert({find(e.at(0)), find(e.at(1))});

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : undirected) {
    if (oriented.count({v, u}))
      edges.emplace_back(v, u);
    else
      edges.emplace_back(u, v);  // default orientation: as listed
  }
  return CartanDatum(std::move(names), std::move(edges));
}

std::string CartanDatum::canonical_text() const {
  std::ostringstream os;
  os << "nodes:";
  for (const auto& s : names_) os << s << ",";
  os << ";edges:";
  for (auto [u, v] : edge_list_) os << u << (oriented_into(v, u) ? ">" : "<") << v << ",";
  return os.str();
}

Weight Weight::operator+(const Weight& o) const {
  Weight w = *this;
  for (size_t i = 0; i < fund.size(); ++i) {
    w.fund[i] += o.fund[i];
    w.root[i] += o.root[i];
  }
  return w;
}

Weight Weight::operator-(const Weight& o) const {
  Weight w = *this;
  for (size_t i = 0; i < fund.size(); ++i) {
    w.fund[i] -= o.fund[i];
    w.root[i] -= o.root[i];
  }
  return w;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < fund.size(); ++i) os << (i ? "," : "") << fund[i];
  os << "|";
  for (size_t i = 0; i < root.size(); ++i) os << (i ? "," : "") << root[i];
  os << "]";
  return os.str();
}

long pairing(const CartanDatum& datum, int i, const Weight& w) {
  long p = w.fund[i];
  for (int j = 0; j < datum.size(); ++j) p += static_cast<long>(datum.a(i, j)) * w.root[j];
  return p;
}

void ScalarChoice::set_t(int i, int j, Scalar v) {
  if (i == j) throw Error("scalars: t_ii is fixed to 1");
  if (v == 0) throw Error("scalars: t_ij must be nonzero");
  t_[i][j] = std::move(v);
}

void ScalarChoice::validate(const CartanDatum& datum) const {
  for (int i = 0; i < size(); ++i) {
    if (t_[i][i] != 1) throw Error("scalars: t_ii != 1");
    for (int j = 0; j < size(); ++j) {
      if (t_[i][j] == 0) throw Error("scalars: zero t_ij");
      if (i != j && datum.a(i, j) == 0 && t_[i][j] != t_[j][i])
        throw Error("scalars: t_ij != t_ji on a non-edge");
    }
  }
}

bool ScalarChoice::is_signed_choice(const CartanDatum& datum) const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (i == j) continue;
      Scalar want = datum.a(i, j) == -1 ? -1 : 1;
      if (v(i, j) != want) return false;
    }
  return true;
}

std::string ScalarChoice::canonical_text() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) os << rat_str(t_[i][j]) << ",";
  return os.str();
}

ScalarChoice default_scalars(const CartanDatum& datum) {
  ScalarChoice q(datum.size());
  for (auto [u, v] : datum.edges()) {
    int from = datum.oriented_into(v, u) ? u : v;
    int to = from == u ? v : u;
    // oriented edge from -> to: t_{to,from} = 1, t_{from,to} = -1
    q.set_t(to, from, 1);
    q.set_t(from, to, -1);
  }
  return q;
}

ScalarChoice scalars_from_json_text(const CartanDatum& datum, const std::string& text) {
  ScalarChoice q = default_scalars(datum);
  if (text.empty()) return q;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("scalar config: ") + e.what());
  }
  if (j.contains("t_overrides"))
    for (const auto& o : j["t_overrides"])
      q.set_t(datum.index_of(o.at("i")), datum.index_of(o.at("j")),
              parse_rat(o.at("t").get<std::string>()));
  q.validate(datum);
  return q;
}

const Scalar& PivotalScalars::cplus(int i, const Weight& w) const {
  auto it = cplus_.find({i, w});
  if (it == cplus_.end()) throw Error("pivotal: c+ not solved at " + w.to_string());
  return it->second;
}

Scalar PivotalScalars::cminus(int i, const Weight& w) const {
  // c^-_{i,w} = 1 / c^+_{i, w - alpha_i}
  return 1 / cplus(i, w.plus_alpha(i, -1));
}

bool PivotalScalars::has(int i, const Weight& w) const { return cplus_.count({i, w}) != 0; }

PivotalScalars solve_pivotal(const CartanDatum& datum, const ScalarChoice& q,
                             const std::set<Weight>& window) {
  PivotalScalars out;
  const int n = datum.size();
  for (int i = 0; i < n; ++i) {
    // Partition the window into root-lattice cosets (equal fund coords);
    // the lexicographically smallest weight of each coset is the base.
    std::map<std::vector<long>, std::vector<Weight>> cosets;
    for (const Weight& w : window) cosets[w.fund].push_back(w);
    for (auto& [key, ws] : cosets) {
      std::sort(ws.begin(), ws.end());
      std::set<Weight> todo(ws.begin(), ws.end());
      // BFS from the base along alpha_j steps staying in the window.
      out.set(i, ws.front(), 1);
      std::queue<Weight> bfs;
      bfs.push(ws.front());
      todo.erase(ws.front());
      while (!bfs.empty()) {
        Weight w = bfs.front();
        bfs.pop();
        for (int j = 0; j < n; ++j)
          for (int dir : {+1, -1}) {
            Weight w2 = w.plus_alpha(j, dir);
            if (!window.count(w2)) continue;
            Scalar c2 = dir > 0 ? Scalar(out.cplus(i, w) * q.t(i, j))
                                : Scalar(out.cplus(i, w) / q.t(i, j));
            if (out.has(i, w2)) {
              if (out.cplus(i, w2) != c2)
                throw Error("pivotal: inconsistent window, cycle through " + w.to_string() +
                            " and " + w2.to_string() + " at node " + datum.name(i));
            } else {
              out.set(i, w2, c2);
              todo.erase(w2);
              bfs.push(w2);
            }
          }
      }
      if (!todo.empty())
        throw Error("pivotal: window not connected under alpha steps near " +
                    todo.begin()->to_string());
    }
  }
  // Verify the compatibility ratio on every adjacent pair in the window.
  for (int i = 0; i < n; ++i)
    for (const Weight& w : window)
      for (int j = 0; j < n; ++j) {
        Weight w2 = w.plus_alpha(j);
        if (!window.count(w2)) continue;
        if (out.cplus(i, w2) / out.cplus(i, w) != q.t(i, j))
          throw Error("pivotal: ratio check failed at " + w.to_string());
      }
  return out;
}

std::vector<std::pair<std::pair<int, int>, bool>> cyclicity_check(const CartanDatum& datum,
                                                                  const ScalarChoice& q) {
  std::vector<std::pair<std::pair<int, int>, bool>> out;
  for (auto [i, j] : datum.edges()) {
    bool ok = q.v(i, j) * q.t(i, j) / q.t(j, i) == 1;
    out.push_back({{i, j}, ok});
  }
  return out;
}

}  // namespace klrtrace
