#include "bcomb/graphs.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace bcomb {

int SignedColoredGraph::max_color() const {
  int cap = scheme == SignatureScheme::peak ? degree - 3 : degree - 1;
  return std::max(cap, 0);
}

int SignedColoredGraph::index_of(const std::string& id) const {
  for (std::size_t k = 0; k < vertices.size(); ++k)
    if (vertices[k] == id) return static_cast<int>(k);
  throw std::out_of_range("no vertex with id '" + id + "'");
}

void SignedColoredGraph::add_edge(int color, int u, int v) {
  assert(u != v);
  edges[color].insert({std::min(u, v), std::max(u, v)});
}

bool SignedColoredGraph::has_edge(int color, int u, int v) const {
  auto it = edges.find(color);
  if (it == edges.end()) return false;
  return it->second.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<int> SignedColoredGraph::neighbors(int color, int u) const {
  std::vector<int> out;
  auto it = edges.find(color);
  if (it == edges.end()) return out;
  for (const auto& [x, y] : it->second) {
    if (x == u) out.push_back(y);
    if (y == u) out.push_back(x);
  }
  return out;
}

long long SignedColoredGraph::edge_count() const {
  long long n = 0;
  for (const auto& e : edges) n += static_cast<long long>(e.second.size());
  return n;
}

std::string signature_string(const std::set<int>& plus, int length) {
  std::string out(static_cast<std::size_t>(length), '-');
  for (int s : plus) {
    if (s < 1 || s > length)
      throw std::invalid_argument("signature slot out of range");
    out[static_cast<std::size_t>(s - 1)] = '+';
  }
  return out;
}

bool well_formed(const SignedColoredGraph& g) {
  int nv = g.vertex_count();
  if (g.degree < 0) return false;
  if (static_cast<int>(g.sigma.size()) != nv) return false;
  std::set<std::string> ids(g.vertices.begin(), g.vertices.end());
  if (static_cast<int>(ids.size()) != nv) return false;
  for (const std::string& s : g.sigma) {
    if (static_cast<int>(s.size()) != g.degree) return false;
    for (char c : s)
      if (c != '+' && c != '-') return false;
    if (g.scheme == SignatureScheme::peak) {
      if (!s.empty() && (s.front() == '+' || s.back() == '+')) return false;
      if (s.find("++") != std::string::npos) return false;
    }
  }
  for (const auto& e : g.edges) {
    if (e.first < 1 || e.first > g.max_color()) return false;
    if (e.second.empty()) return false;
    std::set<int> met;
    for (const auto& [u, v] : e.second) {
      if (u < 0 || v <= u || v >= nv) return false;
      if (met.count(u) || met.count(v)) return false;
      met.insert(u);
      met.insert(v);
    }
  }
  return true;
}

std::string word_vertex_id(const Word& a) { return format_word(a); }

std::string tableau_vertex_id(const ShiftedTableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out += '/';
    const std::vector<int>& row = t.rows()[r];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(row[k]);
    }
  }
  return out;
}

namespace {

std::string peak_signature(const Word& a) {
  std::vector<int> ps = word_peaks(a);
  return signature_string(std::set<int>(ps.begin(), ps.end()),
                          static_cast<int>(a.size()));
}

std::string ascent_signature(const Word& a) {
  std::vector<int> as = word_ascents(a);
  int len = std::max(static_cast<int>(a.size()) - 1, 0);
  return signature_string(std::set<int>(as.begin(), as.end()), len);
}

}  // namespace

SignedColoredGraph ck_graph_a(const SignedPermutation& w) {
  if (!w.is_unsigned())
    throw std::invalid_argument("ck_graph_a needs an unsigned permutation");
  SignedColoredGraph g;
  g.scheme = SignatureScheme::ascent;
  int p = static_cast<int>(w.length());
  g.degree = std::max(p - 1, 0);
  std::vector<Word> words = reduced_words(w);
  std::map<Word, int> index;
  for (const Word& a : words) {
    index.emplace(a, g.vertex_count());
    g.vertices.push_back(word_vertex_id(a));
    g.sigma.push_back(ascent_signature(a));
  }
  for (const Word& a : words) {
    int u = index.at(a);
    for (int i = 1; i + 2 <= p; ++i) {
      Word b = ck_move_a(a, i);
      if (b != a) g.add_edge(i, u, index.at(b));
    }
  }
  return g;
}

SignedColoredGraph ck_graph_b(const SignedPermutation& w) {
  SignedColoredGraph g;
  g.scheme = SignatureScheme::peak;
  int p = static_cast<int>(w.length());
  g.degree = p;
  std::vector<Word> words = reduced_words(w);
  std::map<Word, int> index;
  for (const Word& a : words) {
    index.emplace(a, g.vertex_count());
    g.vertices.push_back(word_vertex_id(a));
    g.sigma.push_back(peak_signature(a));
  }
  for (const Word& a : words) {
    int u = index.at(a);
    for (int i = 1; i + 3 <= p; ++i) {
      Word b = ck_move_b(a, i);
      if (b != a) g.add_edge(i, u, index.at(b));
    }
  }
  return g;
}

SignedColoredGraph sdeg_standard(const StrictPartition& lambda) {
  SignedColoredGraph g;
  g.scheme = SignatureScheme::peak;
  int n = lambda.size();
  g.degree = n;
  std::vector<ShiftedTableau> tabs = enumerate_sst(lambda);
  std::sort(tabs.begin(), tabs.end());
  std::map<ShiftedTableau, int> index;
  for (const ShiftedTableau& t : tabs) {
    index.emplace(t, g.vertex_count());
    g.vertices.push_back(tableau_vertex_id(t));
    g.sigma.push_back(signature_string(peaks_of_tableau(t), n));
  }
  for (const ShiftedTableau& t : tabs) {
    int u = index.at(t);
    for (int i = 1; i + 3 <= n; ++i) {
      ShiftedTableau s = h_move_tableau(t, i);
      if (s != t) g.add_edge(i, u, index.at(s));
    }
  }
  return g;
}

SignedColoredGraph pad_graph(const SignedColoredGraph& g, int degree) {
  if (g.scheme != SignatureScheme::peak)
    throw std::invalid_argument("pad_graph needs peak signatures");
  if (degree < g.degree)
    throw std::invalid_argument("pad_graph cannot shrink the degree");
  SignedColoredGraph out = g;
  out.degree = degree;
  for (std::string& s : out.sigma)
    s.append(static_cast<std::size_t>(degree - g.degree), '-');
  return out;
}

SignedColoredGraph restrict_graph(const SignedColoredGraph& g, int a, int b) {
  if (g.scheme != SignatureScheme::peak)
    throw std::invalid_argument("restrict_graph needs peak signatures");
  if (a < 1 || a > b || b > g.degree)
    throw std::invalid_argument("restrict_graph interval out of range");
  SignedColoredGraph out;
  out.scheme = SignatureScheme::peak;
  out.degree = b - a + 1;
  out.vertices = g.vertices;
  for (const std::string& s : g.sigma) {
    std::string t(static_cast<std::size_t>(out.degree), '-');
    for (int pos = a + 1; pos < b; ++pos)
      if (s[static_cast<std::size_t>(pos - 1)] == '+')
        t[static_cast<std::size_t>(pos - a)] = '+';
    out.sigma.push_back(t);
  }
  for (int i = 1; i + 3 <= out.degree; ++i) {
    auto it = g.edges.find(a + i - 1);
    if (it != g.edges.end() && !it->second.empty()) out.edges[i] = it->second;
  }
  return out;
}

SignedColoredGraph interval_subgraph(const SignedColoredGraph& g, int a,
                                     int b) {
  if (g.scheme != SignatureScheme::peak)
    throw std::invalid_argument("interval_subgraph needs peak signatures");
  if (a < 1 || a > b || b > g.degree)
    throw std::invalid_argument("interval_subgraph interval out of range");
  SignedColoredGraph out = g;
  out.edges.clear();
  for (const auto& e : g.edges)
    if (e.first >= a && e.first <= b - 3) out.edges.insert(e);
  return out;
}

std::vector<std::vector<int>> components(const SignedColoredGraph& g) {
  int nv = g.vertex_count();
  std::vector<int> root(nv);
  for (int v = 0; v < nv; ++v) root[v] = v;
  std::function<int(int)> find = [&](int x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  for (const auto& e : g.edges)
    for (const auto& [u, v] : e.second) root[find(u)] = find(v);
  std::map<int, std::vector<int>> buckets;
  for (int v = 0; v < nv; ++v) buckets[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& e : buckets) out.push_back(std::move(e.second));
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              return x.front() < y.front();
            });
  return out;
}

SignedColoredGraph induced_subgraph(const SignedColoredGraph& g,
                                    const std::vector<int>& keep) {
  SignedColoredGraph out;
  out.scheme = g.scheme;
  out.degree = g.degree;
  std::map<int, int> to_new;
  for (int v : keep) {
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("induced_subgraph vertex out of range");
    if (!to_new.emplace(v, out.vertex_count()).second)
      throw std::invalid_argument("induced_subgraph repeated vertex");
    out.vertices.push_back(g.vertices[v]);
    out.sigma.push_back(g.sigma[v]);
  }
  for (const auto& e : g.edges)
    for (const auto& [u, v] : e.second) {
      auto iu = to_new.find(u);
      auto iv = to_new.find(v);
      if (iu != to_new.end() && iv != to_new.end())
        out.add_edge(e.first, iu->second, iv->second);
    }
  return out;
}

bool is_isomorphism(const SignedColoredGraph& g, const SignedColoredGraph& h,
                    const std::vector<int>& map) {
  if (g.scheme != h.scheme || g.degree != h.degree) return false;
  int nv = g.vertex_count();
  if (h.vertex_count() != nv || static_cast<int>(map.size()) != nv)
    return false;
  std::vector<bool> used(static_cast<std::size_t>(nv), false);
  for (int v = 0; v < nv; ++v) {
    int x = map[static_cast<std::size_t>(v)];
    if (x < 0 || x >= nv || used[static_cast<std::size_t>(x)]) return false;
    used[static_cast<std::size_t>(x)] = true;
    if (g.sigma[static_cast<std::size_t>(v)] !=
        h.sigma[static_cast<std::size_t>(x)])
      return false;
  }
  std::set<int> colors;
  for (const auto& e : g.edges) colors.insert(e.first);
  for (const auto& e : h.edges) colors.insert(e.first);
  for (int c : colors) {
    auto git = g.edges.find(c);
    auto hit = h.edges.find(c);
    std::size_t gn = git == g.edges.end() ? 0 : git->second.size();
    std::size_t hn = hit == h.edges.end() ? 0 : hit->second.size();
    if (gn != hn) return false;
    if (git == g.edges.end()) continue;
    for (const auto& [u, v] : git->second)
      if (!h.has_edge(c, map[static_cast<std::size_t>(u)],
                      map[static_cast<std::size_t>(v)]))
        return false;
  }
  return true;
}

std::optional<std::vector<int>> iso(const SignedColoredGraph& g,
                                    const SignedColoredGraph& h) {
  if (g.scheme != h.scheme || g.degree != h.degree) return std::nullopt;
  int nv = g.vertex_count();
  if (h.vertex_count() != nv) return std::nullopt;
  for (const auto& e : g.edges) {
    auto it = h.edges.find(e.first);
    if (it == h.edges.end() || it->second.size() != e.second.size())
      return std::nullopt;
  }
  for (const auto& e : h.edges)
    if (g.edges.find(e.first) == g.edges.end()) return std::nullopt;

  auto key_of = [](const SignedColoredGraph& x, int v) {
    std::string key = x.sigma[static_cast<std::size_t>(v)];
    for (const auto& e : x.edges) {
      int deg = 0;
      for (const auto& [s, t] : e.second) deg += (s == v) + (t == v);
      if (deg)
        key += "|" + std::to_string(e.first) + ":" + std::to_string(deg);
    }
    return key;
  };
  std::map<std::string, std::vector<int>> h_class;
  for (int v = 0; v < nv; ++v) h_class[key_of(h, v)].push_back(v);
  std::map<std::string, int> g_count;
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    std::string key = key_of(g, v);
    ++g_count[key];
    auto it = h_class.find(key);
    if (it == h_class.end()) return std::nullopt;
    candidates[static_cast<std::size_t>(v)] = it->second;
  }
  for (const auto& e : g_count) {
    auto it = h_class.find(e.first);
    if (it == h_class.end() ||
        static_cast<int>(it->second.size()) != e.second)
      return std::nullopt;
  }

  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(nv));
  for (const auto& e : g.edges)
    for (const auto& [u, v] : e.second) {
      adj[static_cast<std::size_t>(u)].push_back({e.first, v});
      adj[static_cast<std::size_t>(v)].push_back({e.first, u});
    }

  // place vertices adjacent to already placed ones first, then rare classes
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(nv), false);
  std::vector<bool> frontier(static_cast<std::size_t>(nv), false);
  for (int step = 0; step < nv; ++step) {
    int best = -1;
    for (int v = 0; v < nv; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      if (best == -1) {
        best = v;
        continue;
      }
      auto rank = [&](int x) {
        return std::make_tuple(!frontier[static_cast<std::size_t>(x)],
                               candidates[static_cast<std::size_t>(x)].size(),
                               x);
      };
      if (rank(v) < rank(best)) best = v;
    }
    order.push_back(best);
    placed[static_cast<std::size_t>(best)] = true;
    for (const auto& e : adj[static_cast<std::size_t>(best)])
      frontier[static_cast<std::size_t>(e.second)] = true;
  }

  std::vector<int> m(static_cast<std::size_t>(nv), -1);
  std::vector<bool> used(static_cast<std::size_t>(nv), false);
  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k == nv) return true;
    int u = order[static_cast<std::size_t>(k)];
    for (int cand : candidates[static_cast<std::size_t>(u)]) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      bool ok = true;
      for (const auto& e : adj[static_cast<std::size_t>(u)]) {
        int image = m[static_cast<std::size_t>(e.second)];
        if (image >= 0 && !h.has_edge(e.first, cand, image)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      m[static_cast<std::size_t>(u)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      if (rec(k + 1)) return true;
      m[static_cast<std::size_t>(u)] = -1;
      used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  assert(is_isomorphism(g, h, m));
  return m;
}

const std::vector<SignedColoredGraph>& standard_catalog(int degree) {
  if (degree < 0 || degree > 9)
    throw std::invalid_argument("standard_catalog covers degrees 0..9");
  static std::mutex lock;
  static std::map<int, std::vector<SignedColoredGraph>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  std::vector<SignedColoredGraph> entries;
  for (int m = 0; m <= degree; ++m)
    for (const StrictPartition& mu : strict_partitions(m))
      entries.push_back(pad_graph(sdeg_standard(mu), degree));
  return cache.emplace(degree, std::move(entries)).first->second;
}

bool matches_standard(const SignedColoredGraph& g) {
  for (const SignedColoredGraph& s : standard_catalog(g.degree))
    if (iso(g, s)) return true;
  return false;
}

bool is_sdeg(const SignedColoredGraph& g) {
  if (g.scheme != SignatureScheme::peak) return false;
  for (const std::vector<int>& comp : components(g))
    if (!matches_standard(induced_subgraph(g, comp))) return false;
  return true;
}

AxiomReport check_axioms(const SignedColoredGraph& g) {
  if (g.scheme != SignatureScheme::peak)
    throw std::invalid_argument("check_axioms needs peak signatures");
  AxiomReport report;
  for (int a = 1; a <= g.degree && report.locally_standard; ++a) {
    for (int b = a; b <= std::min(g.degree, a + 8); ++b) {
      SignedColoredGraph r = restrict_graph(g, a, b);
      for (const std::vector<int>& comp : components(r)) {
        if (!matches_standard(induced_subgraph(r, comp))) {
          report.locally_standard = false;
          report.locally_standard_witness =
              "interval [" + std::to_string(a) + "," + std::to_string(b) +
              "]: component of " + r.vertices[static_cast<std::size_t>(
                                       comp.front())] +
              " matches no standard graph";
          break;
        }
      }
      if (!report.locally_standard) break;
    }
  }
  auto diamond_failure = [&]() -> std::optional<std::string> {
    for (auto i = g.edges.begin(); i != g.edges.end(); ++i)
      for (auto j = g.edges.begin(); j != g.edges.end(); ++j) {
        if (j->first - i->first <= 3) continue;
        for (const auto& edge : i->second) {
          for (int pivot : {edge.first, edge.second}) {
            int other = pivot == edge.first ? edge.second : edge.first;
            for (int w : g.neighbors(j->first, pivot)) {
              bool found = false;
              for (int y : g.neighbors(j->first, other))
                if (g.has_edge(i->first, w, y)) {
                  found = true;
                  break;
                }
              if (!found)
                return "colors " + std::to_string(i->first) + "," +
                       std::to_string(j->first) + " fail to commute at " +
                       g.vertices[static_cast<std::size_t>(pivot)];
            }
          }
        }
      }
    return std::nullopt;
  }();
  if (diamond_failure) {
    report.commuting = false;
    report.commuting_witness = *diamond_failure;
  }
  return report;
}

std::string to_dot(const SignedColoredGraph& g) {
  std::ostringstream out;
  out << "graph {\n  node [shape=box];\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << g.vertices[static_cast<std::size_t>(v)]
        << "\\n" << g.sigma[static_cast<std::size_t>(v)] << "\"];\n";
  for (const auto& e : g.edges)
    for (const auto& [u, v] : e.second)
      out << "  v" << u << " -- v" << v << " [label=\"" << e.first
          << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace bcomb
