#pragma once

#include <optional>
#include <vector>

#include "bruhat/kgb.hpp"

namespace bruhat {

/// Nodes projecting to one K-orbit on G/P.
struct IEquivClass {
  std::vector<int> members;  // sorted
  int top = -1;              // a member of maximal length (smallest id on ties)
  bool unique_top = true;

  bool operator==(const IEquivClass&) const = default;
};

/// Nodes fixed by m(alpha) for every alpha in I.
std::vector<int> p_maximal_set(const KgbGraph& g, ParabolicSubset levi);

/// Closure of v ~ m(alpha) v and v ~ cross(alpha, v) over alpha in I,
/// ordered by top. Requires a valid graph.
std::vector<IEquivClass> i_equivalence_classes(const KgbGraph& g, ParabolicSubset levi);

/// Class index of every node.
std::vector<int> class_index(const std::vector<IEquivClass>& classes, int size);

/// Order of the tops in the orbit poset. Throws Mismatch if either class is
/// not one of i_equivalence_classes(g, levi).
bool kgp_leq(const KgbGraph& g, ParabolicSubset levi, const IEquivClass& a, const IEquivClass& b);
/// Brute force: some member of a lies below some member of b.
bool kgp_leq_induced(const KgbGraph& g, ParabolicSubset levi, const IEquivClass& a, const IEquivClass& b);

/// Cover relations between class indices.
std::vector<std::pair<int, int>> kgp_hasse(const KgbGraph& g, ParabolicSubset levi);

/// m(s_beta) for an arbitrary root, through the reduced word of the reflection.
int monoid_reflection(const KgbGraph& g, const Root& beta, int v);

/// For v in V_P, alpha outside I and w in W_L: [m(s_{w alpha}) v] = [m(s_alpha) v].
Violations monoid_descent_check(const KgbGraph& g, ParabolicSubset levi);

struct DescentWitness {
  int v = -1;       // in V_P
  int u = -1;       // I-equivalent to v with m(w) u = v
  Word w;           // reduced word of an element of W_L
  int alpha = -1;   // outside I

  bool operator==(const DescentWitness&) const = default;
};

/// Exhaustive search for u ~ v, v = m(w) u with w in W_L, and alpha outside I
/// such that m(alpha) u and m(alpha) v project to different classes.
std::optional<DescentWitness> find_descent_counterexample(const KgbGraph& g, ParabolicSubset levi);

/// For v in V_P and distinct alpha, beta outside I that both move v, the
/// classes of m(alpha) v and m(beta) v differ.
Violations distinct_ascents_check(const KgbGraph& g, ParabolicSubset levi);

}  // namespace bruhat
