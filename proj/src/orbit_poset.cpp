#include "bruhat/orbit_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "text_lines.hpp"

namespace bruhat {

std::vector<int> Fiber::members() const {
  std::vector<int> m = others;
  m.push_back(dense);
  std::sort(m.begin(), m.end());
  return m;
}

OrbitGraph::OrbitGraph(int rank, std::vector<int> lengths, std::vector<std::vector<Fiber>> fibers,
                       std::string rootsystem, std::vector<std::string> names)
    : rank_(rank),
      lengths_(std::move(lengths)),
      fibers_(std::move(fibers)),
      rootsystem_(std::move(rootsystem)),
      names_(std::move(names)) {
  fibers_.resize(std::max(rank_, 0));
  for (auto& per_alpha : fibers_)
    for (auto& f : per_alpha) std::sort(f.others.begin(), f.others.end());
  const int n = size();
  fiber_index_.assign(fibers_.size(), std::vector<int>(n, -1));
  for (std::size_t a = 0; a < fibers_.size(); ++a) {
    for (std::size_t k = 0; k < fibers_[a].size(); ++k) {
      for (int x : fibers_[a][k].members()) {
        if (x < 0 || x >= n) continue;
        int& slot = fiber_index_[a][x];
        slot = slot == -1 ? static_cast<int>(k) : -2;
      }
    }
  }
}

std::string OrbitGraph::name(int v) const {
  if (v >= 0 && v < static_cast<int>(names_.size()) && !names_[v].empty()) return names_[v];
  return std::to_string(v);
}

Violations OrbitGraph::validate() const {
  Violations out;
  const int n = size();
  if (rank_ <= 0) out.push_back({"BadRank", -1, -1, "rank must be positive"});
  for (int v = 0; v < n; ++v)
    if (lengths_[v] < 0) out.push_back({"BadLength", -1, v, "negative length"});

  bool structural_ok = true;
  for (int a = 0; a < static_cast<int>(fibers_.size()); ++a) {
    for (const Fiber& f : fibers_[a]) {
      auto members = f.members();
      bool ids_ok = std::all_of(members.begin(), members.end(), [&](int x) { return x >= 0 && x < n; });
      if (!ids_ok) {
        out.push_back({"BadNodeId", a, f.dense, "fiber references a missing node"});
        structural_ok = false;
        continue;
      }
      if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        out.push_back({"FiberOverlap", a, f.dense, "node repeated inside a fiber"});
        structural_ok = false;
      }
      if (f.size() > 3) out.push_back({"FiberTooLarge", a, f.dense, std::to_string(f.size()) + " members"});
      for (int x : f.others) {
        if (lengths_[x] >= lengths_[f.dense]) {
          out.push_back({"NoDenseNode", a, f.dense, "member " + std::to_string(x) + " is not shorter"});
        } else if (lengths_[x] != lengths_[f.dense] - 1) {
          out.push_back({"FiberLengthGap", a, f.dense, "member " + std::to_string(x) + " differs by more than 1"});
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (fiber_index_[a][v] == -1) {
        out.push_back({"FiberMissing", a, v, "node lies in no fiber"});
        structural_ok = false;
      } else if (fiber_index_[a][v] == -2) {
        out.push_back({"FiberOverlap", a, v, "node lies in two fibers"});
        structural_ok = false;
      }
    }
  }
  if (n > 0 && std::none_of(lengths_.begin(), lengths_.end(), [](int l) { return l == 0; }))
    out.push_back({"NoClosedNode", -1, -1, "no node of length 0"});
  if (structural_ok) {
    for (int v = 0; v < n; ++v) {
      if (lengths_[v] <= 0) continue;
      bool has_descent = false;
      for (int a = 0; a < rank_ && !has_descent; ++a) {
        const Fiber& f = fibers_[a][fiber_index_[a][v]];
        has_descent = f.dense == v && !f.others.empty();
      }
      if (!has_descent) out.push_back({"Unreachable", -1, v, "positive length but no simple relation ends here"});
    }
  }
  normalize(out);
  return out;
}

void OrbitGraph::require_valid() const {
  std::call_once(cache_->valid_once, [this] { cache_->valid = validate().empty(); });
  if (!cache_->valid) {
    auto v = validate();
    throw Error(ErrorKind::AxiomViolation, v.front().to_string(), v);
  }
}

const Fiber& OrbitGraph::fiber(int alpha, int v) const {
  require_valid();
  return fibers_.at(alpha)[fiber_index_.at(alpha).at(v)];
}

int OrbitGraph::monoid_apply(int alpha, int x) const { return fiber(alpha, x).dense; }

int OrbitGraph::monoid_apply_word(const Word& word, int x) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = monoid_apply(*it, x);
  return x;
}

bool OrbitGraph::simple_relation(int alpha, int x, int y) const {
  return x != y && fiber(alpha, x).dense == y;
}

ReducedDecomposition OrbitGraph::reduced_decomposition(int v) const {
  require_valid();
  ReducedDecomposition rd;
  int cur = v;
  while (lengths_[cur] > 0) {
    int alpha = -1;
    for (int a = 0; a < rank_ && alpha < 0; ++a) {
      const Fiber& f = fiber(a, cur);
      if (f.dense == cur && !f.others.empty()) alpha = a;
    }
    if (alpha < 0) throw Error(ErrorKind::Unreachable, "node " + std::to_string(cur) + " has no descent");
    rd.nodes.push_back(cur);
    rd.roots.push_back(alpha);
    cur = fiber(alpha, cur).others.front();
  }
  rd.nodes.push_back(cur);
  std::reverse(rd.nodes.begin(), rd.nodes.end());
  std::reverse(rd.roots.begin(), rd.roots.end());
  return rd;
}

std::vector<ReducedDecomposition> OrbitGraph::all_reduced_decompositions(int v) const {
  require_valid();
  if (lengths_[v] == 0) return {ReducedDecomposition{{v}, {}}};
  std::vector<ReducedDecomposition> out;
  for (int a = 0; a < rank_; ++a) {
    const Fiber& f = fiber(a, v);
    if (f.dense != v) continue;
    for (int x : f.others) {
      for (ReducedDecomposition rd : all_reduced_decompositions(x)) {
        rd.nodes.push_back(v);
        rd.roots.push_back(a);
        out.push_back(std::move(rd));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool OrbitGraph::is_reduced_decomposition(const ReducedDecomposition& rd) const {
  require_valid();
  if (rd.nodes.size() != rd.roots.size() + 1) return false;
  for (int x : rd.nodes)
    if (x < 0 || x >= size()) return false;
  if (lengths_[rd.nodes[0]] != 0) return false;
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    if (rd.roots[i] < 0 || rd.roots[i] >= rank_) return false;
    if (!simple_relation(rd.roots[i], rd.nodes[i], rd.nodes[i + 1])) return false;
  }
  return true;
}

std::vector<int> OrbitGraph::subexpression_endpoints(const ReducedDecomposition& rd, bool use_clause2) const {
  if (!is_reduced_decomposition(rd)) throw Error(ErrorKind::Mismatch, "not a reduced decomposition");
  std::set<int> cur{rd.nodes[0]};
  for (int alpha : rd.roots) {
    std::set<int> next;
    for (int u : cur) {
      next.insert(u);  // clause 1
      const Fiber& f = fiber(alpha, u);
      if (f.dense == u) continue;
      next.insert(f.dense);  // clause 3
      if (use_clause2)
        for (int x : f.others) next.insert(x);  // clause 2: shares the target f.dense
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

const std::vector<std::vector<char>>& OrbitGraph::leq_table() const {
  require_valid();
  std::call_once(cache_->leq_once, [this] {
    const int n = size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return lengths_[a] < lengths_[b]; });
    auto& leq = cache_->leq;
    leq.assign(n, std::vector<char>(n, 0));
    for (int v : order) {
      if (lengths_[v] == 0) {
        leq[v][v] = 1;
        continue;
      }
      int alpha = 0;
      while (!(fiber(alpha, v).dense == v && !fiber(alpha, v).others.empty())) ++alpha;
      int below = fiber(alpha, v).others.front();
      for (int u = 0; u < n; ++u) {
        char r = 0;
        for (int x : fiber(alpha, u).members()) r = r || leq[x][below];
        leq[u][v] = r;
      }
    }
  });
  return cache_->leq;
}

bool OrbitGraph::poset_leq(int u, int v) const {
  const auto& t = leq_table();
  return t.at(u).at(v) != 0;
}

bool OrbitGraph::structurally_sound() const {
  const int n = size();
  if (rank_ <= 0) return false;
  for (int a = 0; a < rank_; ++a) {
    for (const Fiber& f : fibers_[a])
      for (int x : f.members())
        if (x < 0 || x >= n) return false;
    for (int v = 0; v < n; ++v)
      if (fiber_index_[a][v] < 0) return false;
  }
  return true;
}

std::vector<std::vector<char>> OrbitGraph::closure_order() const {
  if (!structurally_sound()) {
    auto v = validate();
    throw Error(ErrorKind::AxiomViolation, v.empty() ? "unsound graph" : v.front().to_string(), v);
  }
  const int n = size();
  auto raw = [&](int a, int v) -> const Fiber& { return fibers_[a][fiber_index_[a][v]]; };
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) r[v][v] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < rank_; ++a) {
      for (const Fiber& f : fibers_[a]) {
        for (int below : f.others) {
          for (int u = 0; u < n; ++u) {
            if (r[u][f.dense]) continue;
            const Fiber& fu = raw(a, u);
            bool hit = r[fu.dense][below];
            for (int x : fu.others) hit = hit || r[x][below];
            if (hit) {
              r[u][f.dense] = 1;
              changed = true;
            }
          }
        }
      }
    }
  }
  return r;
}

Violations OrbitGraph::property_z_check() const {
  const auto leq = closure_order();
  auto raw = [&](int a, int v) -> const Fiber& { return fibers_[a][fiber_index_[a][v]]; };
  Violations out;
  for (int a = 0; a < rank_; ++a) {
    std::vector<std::pair<int, int>> rel;
    for (const Fiber& f : fibers_[a])
      for (int x : f.others) rel.emplace_back(x, f.dense);
    for (auto [u1, u2] : rel) {
      const Fiber& fu = raw(a, u2);
      for (auto [v1, v2] : rel) {
        bool z1 = leq[u1][v1];
        for (int x : fu.others) z1 = z1 || leq[x][v1];
        bool z2 = leq[u2][v2];
        bool z3 = leq[u1][v2];
        if (z1 != z2 || z2 != z3) {
          out.push_back({"PropertyZ", a, u1,
                         "u1=" + name(u1) + " v1=" + name(v1) + " (" + std::to_string(z1) + std::to_string(z2) +
                             std::to_string(z3) + ")"});
        }
      }
    }
  }
  if (out.empty() && validate().empty()) {
    for (int u = 0; u < size(); ++u)
      for (int v = 0; v < size(); ++v)
        if ((leq[u][v] != 0) != poset_leq(u, v))
          out.push_back({"OrderMismatch", -1, u, "closure and lifting orders differ at v=" + name(v)});
  }
  normalize(out);
  return out;
}

std::vector<std::pair<int, int>> OrbitGraph::hasse() const {
  const auto& leq = leq_table();
  const int n = size();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || !leq[u][v]) continue;
      bool cover = true;
      for (int w = 0; w < n && cover; ++w)
        if (w != u && w != v && leq[u][w] && leq[w][v]) cover = false;
      if (cover) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::string OrbitGraph::hasse_dot() const {
  auto edges = hasse();
  std::ostringstream os;
  os << "digraph orbits {\n";
  for (int v = 0; v < size(); ++v) os << "  " << v << " [label=\"" << name(v) << " len=" << lengths_[v] << "\"];\n";
  for (auto [u, v] : edges) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string OrbitGraph::to_text() const {
  std::ostringstream os;
  os << "orbitgraph v1\n";
  os << "rootsystem " << (rootsystem_.empty() ? "rank=" + std::to_string(rank_) : rootsystem_) << "\n";
  os << "nodes " << size() << "\n";
  for (int v = 0; v < size(); ++v) os << "node " << v << " " << lengths_[v] << "\n";
  for (int a = 0; a < rank_; ++a) {
    auto fs = fibers_[a];
    std::sort(fs.begin(), fs.end(), [](const Fiber& x, const Fiber& y) { return x.dense < y.dense; });
    for (const Fiber& f : fs) {
      os << "fiber " << a + 1 << " " << f.dense;
      for (int x : f.others) os << " " << x;
      os << "\n";
    }
  }
  return os.str();
}

OrbitGraph OrbitGraph::from_text(std::string_view text) {
  using namespace detail;
  auto lines = tokenize(text);
  std::size_t pos = 0;
  auto need = [&](std::string_view what) -> const Line& {
    if (pos >= lines.size()) parse_fail("unexpected end of input, expected " + std::string(what));
    return lines[pos];
  };
  const Line& header = need("header");
  if (header.tokens != std::vector<std::string>{"orbitgraph", "v1"}) parse_fail(header, "expected 'orbitgraph v1'");
  ++pos;
  const Line& rs = need("rootsystem");
  expect(rs, "rootsystem", 2);
  ++pos;
  std::string spec = rs.tokens[1];
  int rank = 0;
  if (spec.rfind("rank=", 0) == 0) {
    rank = parse_int(rs, spec.substr(5));
    spec.clear();
  } else {
    try {
      rank = cartan_of_type(spec).rank();
    } catch (const Error& e) {
      parse_fail(rs, e.what());
    }
  }
  if (rank <= 0 || rank > 16) parse_fail(rs, "bad rank");
  const Line& nl = need("nodes");
  expect(nl, "nodes", 2);
  ++pos;
  int n = parse_int(nl, nl.tokens[1]);
  if (n < 0) parse_fail(nl, "negative node count");
  std::vector<int> lengths(n, -1);
  for (int k = 0; k < n; ++k) {
    const Line& l = need("node");
    expect(l, "node", 3);
    int id = parse_int(l, l.tokens[1]);
    if (id != k) parse_fail(l, "nodes must be listed in order 0.." + std::to_string(n - 1));
    lengths[k] = parse_int(l, l.tokens[2]);
    ++pos;
  }
  std::vector<std::vector<Fiber>> fibers(rank);
  for (; pos < lines.size(); ++pos) {
    const Line& l = lines[pos];
    expect(l, "fiber", 3, true);
    int a = parse_int(l, l.tokens[1]) - 1;
    if (a < 0 || a >= rank) parse_fail(l, "simple index out of range");
    Fiber f;
    f.dense = parse_int(l, l.tokens[2]);
    for (std::size_t t = 3; t < l.tokens.size(); ++t) f.others.push_back(parse_int(l, l.tokens[t]));
    fibers[a].push_back(std::move(f));
  }
  return OrbitGraph(rank, std::move(lengths), std::move(fibers), spec);
}

bool OrbitGraph::operator==(const OrbitGraph& o) const {
  if (rank_ != o.rank_ || lengths_ != o.lengths_) return false;
  auto canon = [](std::vector<Fiber> fs) {
    std::sort(fs.begin(), fs.end(), [](const Fiber& x, const Fiber& y) { return x.dense < y.dense; });
    return fs;
  };
  for (int a = 0; a < rank_; ++a)
    if (canon(fibers_[a]) != canon(o.fibers_[a])) return false;
  return true;
}

namespace {

std::string rootsystem_name(const DatumPtr& d) {
  const auto& t = d->cartan_spec().type_name;
  return t.empty() ? "rank=" + std::to_string(d->rank()) : t;
}

}  // namespace

OrbitGraph from_weyl(const DatumPtr& datum) {
  auto elems = enumerate(datum);
  std::map<std::vector<int>, int> index;
  for (std::size_t k = 0; k < elems.size(); ++k) index[elems[k].key()] = static_cast<int>(k);
  std::vector<int> lengths;
  std::vector<std::string> names;
  for (const auto& w : elems) {
    lengths.push_back(w.length());
    names.push_back(w.to_string());
  }
  std::vector<std::vector<Fiber>> fibers(datum->rank());
  for (int a = 0; a < datum->rank(); ++a) {
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (!elems[k].images()[a].is_positive()) continue;
      fibers[a].push_back({index.at(elems[k].times_simple(a).key()), {static_cast<int>(k)}});
    }
  }
  return OrbitGraph(datum->rank(), std::move(lengths), std::move(fibers), rootsystem_name(datum), std::move(names));
}

OrbitGraph from_parabolic(const DatumPtr& datum, ParabolicSubset levi) {
  auto cosets = enumerate_cosets(datum, levi);
  std::map<std::vector<int>, int> index;
  for (std::size_t k = 0; k < cosets.size(); ++k) index[cosets[k].min_rep.key()] = static_cast<int>(k);
  std::vector<int> lengths;
  std::vector<std::string> names;
  for (const auto& c : cosets) {
    lengths.push_back(c.plen());
    names.push_back(c.min_rep.to_string());
  }
  std::vector<std::vector<Fiber>> fibers(datum->rank());
  for (int a = 0; a < datum->rank(); ++a) {
    for (std::size_t k = 0; k < cosets.size(); ++k) {
      const WeylElt& m = cosets[k].min_rep;
      switch (classify_step(m, datum->simple_root(a), levi)) {
        case StepClass::LeviType:
          fibers[a].push_back({static_cast<int>(k), {}});
          break;
        case StepClass::ComplexUpward:
          fibers[a].push_back({index.at(coset_of(m.times_simple(a), levi).min_rep.key()), {static_cast<int>(k)}});
          break;
        case StepClass::ComplexDownward:
          break;
      }
    }
  }
  return OrbitGraph(datum->rank(), std::move(lengths), std::move(fibers), rootsystem_name(datum), std::move(names));
}

}  // namespace bruhat
