#include "bruhat/kgp.hpp"

#include <algorithm>
#include <numeric>

namespace bruhat {

namespace {

std::string id(int v) { return std::to_string(v); }

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Elements of W_L in enumeration order, as reduced words.
std::vector<Word> levi_words(const DatumPtr& d, ParabolicSubset levi) {
  std::vector<Word> out;
  for (const auto& w : enumerate(d)) {
    Word word = w.reduced_word();
    if (std::all_of(word.begin(), word.end(), [&](int i) { return levi.contains(i); })) out.push_back(word);
  }
  return out;
}

std::vector<int> outside(int rank, ParabolicSubset levi) {
  std::vector<int> out;
  for (int a = 0; a < rank; ++a)
    if (!levi.contains(a)) out.push_back(a);
  return out;
}

int index_of(const std::vector<IEquivClass>& cs, const IEquivClass& c) {
  auto it = std::find(cs.begin(), cs.end(), c);
  if (it == cs.end()) throw Error(ErrorKind::Mismatch, "class does not belong to this graph and subset");
  return static_cast<int>(it - cs.begin());
}

}  // namespace

std::vector<int> p_maximal_set(const KgbGraph& g, ParabolicSubset levi) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v) {
    bool fixed = true;
    for (int a : levi.members()) fixed = fixed && g.monoid(a, v) == v;
    if (fixed) out.push_back(v);
  }
  return out;
}

std::vector<IEquivClass> i_equivalence_classes(const KgbGraph& g, ParabolicSubset levi) {
  g.require_valid();
  const int n = g.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int v = 0; v < n; ++v)
    for (int a : levi.members())
      for (int x : {g.monoid(a, v), g.cross_action(a, v)}) parent[find_root(parent, x)] = find_root(parent, v);

  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[find_root(parent, v)].push_back(v);
  std::vector<IEquivClass> out;
  for (auto& m : groups) {
    if (m.empty()) continue;
    IEquivClass c;
    c.members = std::move(m);
    int best = -1;
    for (int v : c.members) best = std::max(best, g.length(v));
    for (int v : c.members)
      if (g.length(v) == best) {
        if (c.top < 0)
          c.top = v;
        else
          c.unique_top = false;
      }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const IEquivClass& a, const IEquivClass& b) { return a.top < b.top; });
  return out;
}

std::vector<int> class_index(const std::vector<IEquivClass>& classes, int size) {
  std::vector<int> out(size, -1);
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (int v : classes[k].members) out[v] = static_cast<int>(k);
  return out;
}

bool kgp_leq(const KgbGraph& g, ParabolicSubset levi, const IEquivClass& a, const IEquivClass& b) {
  auto cs = i_equivalence_classes(g, levi);
  index_of(cs, a);
  index_of(cs, b);
  return to_orbit_poset(g).poset_leq(a.top, b.top);
}

bool kgp_leq_induced(const KgbGraph& g, ParabolicSubset levi, const IEquivClass& a, const IEquivClass& b) {
  auto cs = i_equivalence_classes(g, levi);
  index_of(cs, a);
  index_of(cs, b);
  auto og = to_orbit_poset(g);
  for (int u : a.members)
    for (int v : b.members)
      if (og.poset_leq(u, v)) return true;
  return false;
}

std::vector<std::pair<int, int>> kgp_hasse(const KgbGraph& g, ParabolicSubset levi) {
  auto cs = i_equivalence_classes(g, levi);
  auto og = to_orbit_poset(g);
  const int k = static_cast<int>(cs.size());
  auto lt = [&](int x, int y) { return x != y && og.poset_leq(cs[x].top, cs[y].top); };
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (!lt(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < k && cover; ++z) cover = !(lt(x, z) && lt(z, y));
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

int monoid_reflection(const KgbGraph& g, const Root& beta, int v) {
  return g.monoid_word(reflection(g.datum(), beta).reduced_word(), v);
}

Violations monoid_descent_check(const KgbGraph& g, ParabolicSubset levi) {
  auto cs = i_equivalence_classes(g, levi);
  auto cls = class_index(cs, g.size());
  const auto& d = g.datum();
  auto wl = levi_words(d, levi);
  Violations out;
  for (int v : p_maximal_set(g, levi))
    for (int a : outside(g.rank(), levi)) {
      const int want = cls[g.monoid(a, v)];
      for (const Word& w : wl) {
        Root beta = WeylElt::from_word(d, w).act(d->simple_root(a));
        int got = cls[monoid_reflection(g, beta, v)];
        if (got != want)
          out.push_back({"MonoidDescent", a, v,
                         "w=" + format_word(w) + ": class " + id(got) + " instead of " + id(want)});
      }
    }
  normalize(out);
  return out;
}

std::optional<DescentWitness> find_descent_counterexample(const KgbGraph& g, ParabolicSubset levi) {
  auto cs = i_equivalence_classes(g, levi);
  auto cls = class_index(cs, g.size());
  auto wl = levi_words(g.datum(), levi);
  auto pmax = p_maximal_set(g, levi);
  auto out_roots = outside(g.rank(), levi);
  for (int v : pmax)
    for (int u : cs[cls[v]].members)
      for (const Word& w : wl) {
        if (g.monoid_word(w, u) != v) continue;
        for (int a : out_roots)
          if (cls[g.monoid(a, u)] != cls[g.monoid(a, v)]) return DescentWitness{v, u, w, a};
      }
  return std::nullopt;
}

Violations distinct_ascents_check(const KgbGraph& g, ParabolicSubset levi) {
  auto cs = i_equivalence_classes(g, levi);
  auto cls = class_index(cs, g.size());
  auto out_roots = outside(g.rank(), levi);
  Violations out;
  for (int v : p_maximal_set(g, levi))
    for (std::size_t i = 0; i < out_roots.size(); ++i)
      for (std::size_t j = i + 1; j < out_roots.size(); ++j) {
        int a = out_roots[i], b = out_roots[j];
        int x = g.monoid(a, v), y = g.monoid(b, v);
        if (x == v || y == v) continue;
        if (cls[x] == cls[y])
          out.push_back({"DistinctAscents", a, v,
                         "roots " + id(a + 1) + " and " + id(b + 1) + " both reach class " + id(cls[x])});
      }
  normalize(out);
  return out;
}

}  // namespace bruhat
