#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "bruhat/parabolic.hpp"

namespace bruhat {

/// One pi_alpha fiber: its dense node plus the remaining members.
struct Fiber {
  int dense = -1;
  std::vector<int> others;

  std::vector<int> members() const;
  int size() const { return 1 + static_cast<int>(others.size()); }
  bool operator==(const Fiber&) const = default;
};

struct ReducedDecomposition {
  std::vector<int> nodes;  // v_0 .. v_k
  std::vector<int> roots;  // alpha_1 .. alpha_k, 0-based

  bool operator==(const ReducedDecomposition&) const = default;
  bool operator<(const ReducedDecomposition& o) const {
    return std::tie(roots, nodes) < std::tie(o.roots, o.nodes);
  }
};

/// Finite orbit set with per-simple-root fibers.
///
/// Construction never throws on axiom failures so validate() can report them;
/// queries that need a valid graph throw AxiomViolation instead.
class OrbitGraph {
 public:
  OrbitGraph() = default;
  /// fibers[alpha] lists the alpha-fibers; together they should partition the nodes.
  OrbitGraph(int rank, std::vector<int> lengths, std::vector<std::vector<Fiber>> fibers,
             std::string rootsystem = {}, std::vector<std::string> names = {});

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(lengths_.size()); }
  int length(int v) const { return lengths_.at(v); }
  const std::vector<int>& lengths() const { return lengths_; }
  const std::string& rootsystem() const { return rootsystem_; }
  /// Display name of a node; its id when none was supplied.
  std::string name(int v) const;

  const std::vector<Fiber>& fibers(int alpha) const { return fibers_.at(alpha); }
  /// The alpha-fiber containing v. Requires a valid graph.
  const Fiber& fiber(int alpha, int v) const;

  Violations validate() const;
  bool is_valid() const { return validate().empty(); }

  /// Dense node of the alpha-fiber of x.
  int monoid_apply(int alpha, int x) const;
  /// Applies a word right to left: the last letter acts first.
  int monoid_apply_word(const Word& word, int x) const;
  /// x ->alpha y with x != y.
  bool simple_relation(int alpha, int x, int y) const;

  /// Built backward: smallest descent alpha, then the smallest-id shorter member.
  ReducedDecomposition reduced_decomposition(int v) const;
  std::vector<ReducedDecomposition> all_reduced_decompositions(int v) const;
  bool is_reduced_decomposition(const ReducedDecomposition& rd) const;

  /// Endpoints of all subexpressions; clause 2 can be switched off to measure it.
  std::vector<int> subexpression_endpoints(const ReducedDecomposition& rd, bool use_clause2 = true) const;

  bool poset_leq(int u, int v) const;
  /// Least relation closed under every lifting step u <= v <= m(alpha)v'
  /// (all alpha, all v'). Needs only a sound fiber partition, not lengths.
  std::vector<std::vector<char>> closure_order() const;
  /// Ids in range and every node in exactly one fiber per root.
  bool structurally_sound() const;
  /// Evaluated on closure_order(); on valid graphs also compares it with
  /// poset_leq. Throws AxiomViolation if the graph is not structurally sound.
  Violations property_z_check() const;
  /// Cover relations sorted by (lower, upper).
  std::vector<std::pair<int, int>> hasse() const;
  std::string hasse_dot() const;

  std::string to_text() const;
  static OrbitGraph from_text(std::string_view text);

  /// Equal lengths and equal fibers under the identity node map.
  bool operator==(const OrbitGraph& o) const;

 private:
  void require_valid() const;
  const std::vector<std::vector<char>>& leq_table() const;

  int rank_ = 0;
  std::vector<int> lengths_;
  std::vector<std::vector<Fiber>> fibers_;
  std::string rootsystem_;
  std::vector<std::string> names_;
  // fiber_index_[alpha][v]: index into fibers_[alpha], -1 missing, -2 repeated.
  std::vector<std::vector<int>> fiber_index_;

  struct Cache {
    std::once_flag valid_once;
    bool valid = false;
    std::once_flag leq_once;
    std::vector<std::vector<char>> leq;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// B-orbits: nodes are W in enumeration order, fibers {w, w s_alpha}.
OrbitGraph from_weyl(const DatumPtr& datum);
/// P-orbits: nodes are cosets in enumeration order.
OrbitGraph from_parabolic(const DatumPtr& datum, ParabolicSubset levi);

}  // namespace bruhat
