#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat/orbit_poset.hpp"

namespace bruhat {

/// Type of a simple root relative to a K-orbit.
enum class RootTypeLabel { ComplexAscent, ComplexDescent, CompactImaginary, NoncompactI, NoncompactII, RealI, RealII };

/// Short text codes: C+, C-, ci, nci1, nci2, r1, r2.
std::string_view to_code(RootTypeLabel t);
std::optional<RootTypeLabel> label_from_code(std::string_view code);

bool is_complex(RootTypeLabel t);
bool is_imaginary(RootTypeLabel t);  // ci, nci1, nci2
bool is_noncompact(RootTypeLabel t);
bool is_real(RootTypeLabel t);
/// C+, nci1, nci2: the labels for which m(alpha) moves the node.
bool is_ascent(RootTypeLabel t);

/// What a twisted involution alone says about a simple root.
enum class TwClass { Real, Imaginary, Complex };
/// tw * theta(alpha) = -alpha, +alpha, or neither.
TwClass tw_class(const WeylElt& tw, int alpha);

/// All w with theta(w) = w^{-1}, in enumeration order.
std::vector<WeylElt> twisted_involutions(const DatumPtr& datum);
bool is_twisted_involution(const WeylElt& w);

struct KgbLabel {
  RootTypeLabel type = RootTypeLabel::CompactImaginary;
  int cross = -1;
  int cayley = -1;  // set only for noncompact labels

  bool operator==(const KgbLabel&) const = default;
};

struct KgbNode {
  int length = 0;
  WeylElt tw;
  std::vector<KgbLabel> labels;  // one per simple root

  bool operator==(const KgbNode& o) const { return length == o.length && tw == o.tw && labels == o.labels; }
};

/// K-orbits on G/B given by their twisted involutions and per-root labels.
///
/// Like OrbitGraph, construction never throws on axiom failures; validate()
/// reports them and queries that need a valid graph throw AxiomViolation.
class KgbGraph {
 public:
  KgbGraph() = default;
  KgbGraph(DatumPtr datum, std::vector<KgbNode> nodes, std::vector<std::string> names = {});

  const DatumPtr& datum() const { return datum_; }
  int rank() const { return datum_->rank(); }
  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<KgbNode>& nodes() const { return nodes_; }
  const KgbNode& node(int v) const { return nodes_.at(v); }
  int length(int v) const { return nodes_.at(v).length; }
  const WeylElt& tw(int v) const { return nodes_.at(v).tw; }
  std::string name(int v) const;
  const std::vector<std::string>& names() const { return names_; }

  Violations validate() const;
  bool is_valid() const { return validate().empty(); }
  void require_valid() const;

  RootTypeLabel root_type(int alpha, int v) const;
  int cross_action(int alpha, int v) const;
  /// Throws NotNoncompact unless the label is nci1 or nci2.
  int cayley(int alpha, int v) const;
  /// Sorted by id. Throws NotReal unless the label is r1 or r2.
  std::vector<int> inverse_cayley(int alpha, int v) const;
  /// C+ -> cross, nci -> Cayley, otherwise v.
  int monoid(int alpha, int v) const;
  /// Right to left: the last letter acts first.
  int monoid_word(const Word& word, int v) const;

  /// Nodes of maximal length; a unique one is the open orbit.
  std::vector<int> open_nodes() const;
  std::vector<int> closed_nodes() const;

  bool operator==(const KgbGraph& o) const;

 private:
  bool label_ok(int alpha, int v) const;

  DatumPtr datum_;
  std::vector<KgbNode> nodes_;
  std::vector<std::string> names_;
};

/// Empty when the sign of tw(v) theta(alpha) matches every ascent label.
/// Runs on unvalidated graphs as long as the twisted involutions are set.
Violations ascent_consistency_check(const KgbGraph& g);

/// Fibers read off the labels: complex pairs, nci1 triples, nci2 pairs,
/// compact singletons. Requires a valid graph.
OrbitGraph to_orbit_poset(const KgbGraph& g);

struct DownStep {
  int alpha = -1;
  int branch = -1;  // index among the sorted inverse Cayley images at r1, else -1

  bool operator==(const DownStep&) const = default;
};

struct CanonicalSequences {
  int closed = -1;  // start of the upward sequence
  Word upward;      // letters in the order they are applied
  int open = -1;
  std::vector<DownStep> downward;  // from the open node down to v
};

/// Throws NoOpenNode when the maximal length is not attained exactly once.
CanonicalSequences canonical_sequences(const KgbGraph& g, int v);
/// Applies the letters of an upward sequence in order.
int replay_upward(const KgbGraph& g, int start, const Word& letters);
int replay_downward(const KgbGraph& g, int start, const std::vector<DownStep>& steps);

/// Every upward path ending in an nci1 Cayley step has a parallel path,
/// with the same letters and labels, ending through the cross image.
Violations sequence_rewriting_check(const KgbGraph& g);

/// For each u and target t, the minimal-length w with m(w)u = t is unique.
Violations minimal_w_uniqueness_check(const KgbGraph& g);

/// Checks m(alpha)^2 = m(alpha) and the braid relations node by node, and
/// that every reduced word of every w gives the same m(w) (rank <= 2 or small W).
Violations monoid_relations_check(const KgbGraph& g);

std::string save_kgb(const KgbGraph& g);
/// Throws ParseError, or AxiomViolation if the parsed graph fails validate().
KgbGraph load_kgb(std::string_view text);
/// Parses without validating.
KgbGraph parse_kgb(std::string_view text);

namespace fixtures {

/// Split real form of SL(2): two closed orbits joined by an nci1 cross
/// action, one open orbit above them.
KgbGraph sl2_split();
/// Split PGL(2): m_alpha trivial, one nci2 closed orbit and one open orbit.
KgbGraph pgl2_split();
/// A1 x A1 with the factors swapped; the group case of A1.
KgbGraph a1xa1_swap();

}  // namespace fixtures

/// Diagonal symmetric pair in G x G: nodes are W in enumerate() order, with
/// tw(w) = (w, w^{-1}). The first copy of alpha_i moves w to s_i w, the second
/// to w s_i.
KgbGraph group_case(const DatumPtr& datum);

/// Synthetic harness, not a real form: nodes are the twisted involutions of
/// the datum and every imaginary root is treated as noncompact (type II).
KgbGraph twisted_involution_shadow(const DatumPtr& datum);

}  // namespace bruhat
