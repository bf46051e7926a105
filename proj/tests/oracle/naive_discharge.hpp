#pragma once

// Brute-force restatement of the charge rules. Shares nothing with the
// library: darts are (tail, head) pairs looked up by linear scan, the
// abstract graph is rebuilt by walking straight through crossings, and
// amounts are int64 fractions. Only meant for drawings with a dozen
// vertices.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace naive {

struct Frac {
  std::int64_t n = 0, d = 1;

  Frac() = default;
  Frac(std::int64_t num, std::int64_t den = 1) : n(num), d(den) {
    if (d < 0) n = -n, d = -d;
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
  }
  friend Frac operator+(Frac a, Frac b) { return Frac(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Frac operator/(Frac a, std::int64_t k) { return Frac(a.n, a.d * k); }
  friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
  std::string str() const { return std::to_string(n) + "/" + std::to_string(d); }
};

using Rot = std::vector<std::vector<int>>;

inline int index_of(const std::vector<int>& ring, int x) {
  for (int i = 0; i < static_cast<int>(ring.size()); ++i)
    if (ring[i] == x) return i;
  throw std::logic_error("not a neighbor");
}

inline int at(const std::vector<int>& ring, int i) {
  const int n = static_cast<int>(ring.size());
  return ring[((i % n) + n) % n];
}

struct Drawing {
  Rot rot;
  std::vector<bool> crossing;
  // Darts in (vertex, slot) order; face id by first dart met in that order.
  std::vector<std::pair<int, int>> darts;
  std::vector<int> dart_face;
  std::vector<std::vector<int>> face_tails;

  int dart_id(int u, int v) const {
    for (int i = 0; i < static_cast<int>(darts.size()); ++i)
      if (darts[i].first == u && darts[i].second == v) return i;
    throw std::logic_error("no dart");
  }
  // Face to the left when turning at v from neighbor slot i to slot i+1.
  int face_at(int v, int i) const { return dart_face[dart_id(v, at(rot[v], i + 1))]; }
  int deg(int v) const { return static_cast<int>(rot[v].size()); }
  int face_deg(int f) const { return static_cast<int>(face_tails[f].size()); }
  bool false_face(int f) const {
    for (int x : face_tails[f])
      if (crossing[x]) return true;
    return false;
  }
};

inline Drawing trace(const Rot& rot, const std::vector<bool>& crossing) {
  Drawing dr{rot, crossing, {}, {}, {}};
  for (int v = 0; v < static_cast<int>(rot.size()); ++v)
    for (int u : rot[v]) dr.darts.emplace_back(v, u);
  dr.dart_face.assign(dr.darts.size(), -1);
  for (int start = 0; start < static_cast<int>(dr.darts.size()); ++start) {
    if (dr.dart_face[start] != -1) continue;
    const int f = static_cast<int>(dr.face_tails.size());
    dr.face_tails.emplace_back();
    int cur = start;
    while (dr.dart_face[cur] == -1) {
      dr.dart_face[cur] = f;
      auto [u, v] = dr.darts[cur];
      dr.face_tails[f].push_back(u);
      const int w = at(rot[v], index_of(rot[v], u) + 1);
      cur = dr.dart_id(v, w);
    }
  }
  return dr;
}

// Edges of the drawn graph: walk from a true vertex straight through each
// crossing until another true vertex is reached.
inline std::set<std::pair<int, int>> original_edges(const Drawing& dr) {
  std::set<std::pair<int, int>> edges;
  for (int u = 0; u < static_cast<int>(dr.rot.size()); ++u) {
    if (dr.crossing[u]) continue;
    for (int w : dr.rot[u]) {
      int prev = u, cur = w;
      while (dr.crossing[cur]) {
        const int nxt = at(dr.rot[cur], index_of(dr.rot[cur], prev) + 2);
        prev = cur;
        cur = nxt;
      }
      edges.insert({std::min(u, cur), std::max(u, cur)});
    }
  }
  return edges;
}

struct Line {
  std::string rule;
  std::string source, target, via;
  Frac amount;

  std::string str() const { return rule + ";" + source + ";" + target + ";" + via + ";" + amount.str(); }
  bool operator<(const Line& o) const { return str() < o.str(); }
};

inline std::string V(int v) { return "v" + std::to_string(v); }
inline std::string F(int f) { return "f" + std::to_string(f); }

inline std::vector<std::string> ledger(const Rot& rot, const std::vector<bool>& crossing) {
  const Drawing dr = trace(rot, crossing);
  const auto E = original_edges(dr);
  auto edge = [&](int a, int b) { return E.count({std::min(a, b), std::max(a, b)}) > 0; };
  const int nv = static_cast<int>(rot.size());
  const int nf = static_cast<int>(dr.face_tails.size());

  // Is face f (a false triangle) k-special with pivot p?
  auto special = [&](int f, int p) {
    if (dr.face_deg(f) != 3) return false;
    const auto& t = dr.face_tails[f];
    for (int x : t) {
      if (!dr.crossing[x]) continue;
      for (int y : t) {
        if (y == x || y == p || dr.crossing[y]) continue;
        if (p == x || dr.crossing[p]) continue;
        // x generated by p-v3 crossing y-v4
        const int v3 = at(dr.rot[x], index_of(dr.rot[x], p) + 2);
        const int v4 = at(dr.rot[x], index_of(dr.rot[x], y) + 2);
        const int k = dr.deg(p);
        const int cap = k == 4 ? 11 : k == 5 ? 9 : k == 6 ? 8 : -1;
        if (cap < 0) continue;
        if (edge(y, v3) && dr.deg(v4) <= cap) return true;
      }
    }
    return false;
  };

  std::vector<Line> out;
  std::vector<Frac> charge(nf);
  for (int f = 0; f < nf; ++f) charge[f] = Frac(dr.face_deg(f) - 4);
  auto give = [&](const std::string& rule, int from_face, const std::string& to, const std::string& via, Frac a) {
    out.push_back({rule, F(from_face), to, via, a});
    charge[from_face] = charge[from_face] - a;
    if (to[0] == 'f') {
      const int g = std::stoi(to.substr(1));
      charge[g] = charge[g] + a;
    }
  };

  // Vertex rules, one pass over every corner of every true vertex.
  for (int v = 0; v < nv; ++v) {
    if (dr.crossing[v]) continue;
    const int d = dr.deg(v);
    for (int i = 0; i < d; ++i) {
      const int f = dr.face_at(v, i);
      const bool tri = dr.face_deg(f) == 3;
      std::string rule;
      Frac a;
      if (d == 4 && special(f, v)) rule = "R1", a = Frac(1, 6);
      if (d == 5 && special(f, v)) rule = "R2", a = Frac(3, 10);
      if (d == 5 && !special(f, v) && tri) rule = "R2", a = Frac(1, 5);
      if (d == 6 && special(f, v)) rule = "R3", a = Frac(7, 18);
      if (d == 6 && !special(f, v) && tri) rule = "R3", a = Frac(1, 3);
      if (d == 7 && tri && dr.false_face(f)) rule = "R4", a = Frac(1, 2);
      if (d >= 8) rule = "R5", a = Frac(d - 4, d);
      if (rule.empty()) continue;
      out.push_back({rule, V(v), F(f), "-", a});
      charge[f] = charge[f] + a;
    }
  }

  // Crossing rules: every corner of every crossing as f1, both label
  // directions; a corner's transfer set is applied once.
  for (int v = 0; v < nv; ++v) {
    if (!dr.crossing[v]) continue;
    for (int s = 0; s < 4; ++s) {
      std::set<std::vector<std::pair<std::string, std::int64_t>>> firings;
      std::vector<std::vector<Line>> chosen;
      for (int dir : {+1, -1}) {
        // v1, v2 are the corner's ends in label order, then v3, v4 opposite.
        const int i1 = dir > 0 ? s : s + 1;
        const int v1 = at(dr.rot[v], i1), v2 = at(dr.rot[v], i1 + dir);
        const int v3 = at(dr.rot[v], i1 + 2), v4 = at(dr.rot[v], i1 + dir + 2);
        const int f1 = dr.face_at(v, s);
        // f2 lies between v2 and v3, f4 between v4 and v1.
        const int f2 = dir > 0 ? dr.face_at(v, s + 1) : dr.face_at(v, s - 1);
        const int f4 = dir > 0 ? dr.face_at(v, s - 1) : dr.face_at(v, s + 1);
        const int m = std::min(dr.deg(v1), dr.deg(v2));
        const int d3 = dr.deg(v3), d4 = dr.deg(v4);
        std::vector<Line> set;
        auto put = [&](const std::string& r, const std::string& to, Frac a) { set.push_back({r, F(f1), to, V(v), a}); };
        if (m >= 24 && d3 == 3) {
          if (d4 == 3) {
            put("R6.1", F(f2), Frac(1, 6));
            put("R6.1", F(f4), Frac(1, 6));
            put("R6.1", V(v3), Frac(1, 6));
            put("R6.1", V(v4), Frac(1, 6));
          } else {
            put("R6.1", F(f2), Frac(1, 3));
            put("R6.1", V(v3), Frac(1, 3));
          }
        }
        std::string r;
        Frac small, big, four;
        if (m >= 12 && m <= 23) r = "R6.2", small = Frac(1, 6), big = Frac(1, 3), four = Frac(1, 3);
        if (m >= 10 && m <= 11) r = "R6.3", small = Frac(1, 10), big = Frac(1, 5), four = Frac(3, 10);
        if (m == 9) r = "R6.4", small = Frac(1, 18), big = Frac(1, 9), four = Frac(5, 18);
        if (!r.empty() && d3 <= 6) {
          if (dr.face_deg(f1) == 3 && d4 <= 6) {
            put(r, F(f2), small);
            put(r, F(f4), small);
          } else if (dr.face_deg(f1) == 3) {
            put(r, F(f2), big);
          } else {
            put(r, F(f2), four);
            put(r, F(f4), four);
          }
        }
        if (set.empty()) continue;
        std::vector<std::pair<std::string, std::int64_t>> key;
        for (const auto& l : set) key.emplace_back(l.rule + l.target, l.amount.n * 1000000 + l.amount.d);
        std::sort(key.begin(), key.end());
        if (firings.insert(key).second) chosen.push_back(set);
      }
      for (const auto& set : chosen)
        for (const auto& l : set) give(l.rule, std::stoi(l.source.substr(1)), l.target, l.via, l.amount);
    }
  }

  // Face residuals.
  for (int f = 0; f < nf; ++f) {
    const auto& t = dr.face_tails[f];
    Frac left = charge[f];
    std::vector<int> takers;
    std::string r = dr.face_deg(f) <= 4 ? "R7" : "R8";
    if (r == "R8") {
      for (int x : t)
        if (!dr.crossing[x] && dr.deg(x) == 3) {
          out.push_back({r, F(f), V(x), "-", Frac(2, 3)});
          left = left - Frac(2, 3);
        }
    }
    for (int x : t) {
      if (dr.crossing[x]) continue;
      if (r == "R7" ? dr.deg(x) <= 4 : dr.deg(x) == 4) takers.push_back(x);
    }
    if (takers.empty() || left == Frac(0)) continue;
    for (int x : takers) out.push_back({r, F(f), V(x), "-", left / static_cast<std::int64_t>(takers.size())});
  }

  std::vector<std::string> lines;
  for (const auto& l : out) lines.push_back(l.str());
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace naive
