#pragma once

#include <vector>

#include "bruhat/weyl.hpp"

namespace bruhat {

/// Left coset W_L w of the parabolic subgroup generated by I.
struct ParabolicCoset {
  ParabolicSubset levi;
  WeylElt min_rep;
  WeylElt max_rep;

  /// Parabolic length: the length of the minimal representative.
  int plen() const { return min_rep.length(); }
  bool operator==(const ParabolicCoset& o) const { return levi == o.levi && min_rep == o.min_rep; }
};

ParabolicCoset coset_of(const WeylElt& w, ParabolicSubset levi);

/// Minimal in W_L w: w^{-1} keeps every alpha in I positive.
bool is_p_minimal(const WeylElt& w, ParabolicSubset levi);
/// Maximal in W_L w: w^{-1} sends every alpha in I negative.
bool is_p_maximal(const WeylElt& w, ParabolicSubset levi);

/// Every prefix image w_j(alpha_{i_{j+1}}) lies in the nilradical.
bool is_p_reduced(const DatumPtr& datum, const Word& word, ParabolicSubset levi);

enum class StepClass { LeviType, ComplexUpward, ComplexDownward };

/// Classifies w(alpha) for a positive root alpha. Throws NotPositiveRoot.
StepClass classify_step(const WeylElt& w, const Root& alpha, ParabolicSubset levi);

/// Throws ParabolicMismatch when the subsets differ.
bool coset_bruhat_leq(const ParabolicCoset& a, const ParabolicCoset& b);
/// Same order read off the maximal representatives.
bool coset_bruhat_leq_max(const ParabolicCoset& a, const ParabolicCoset& b);
/// Induced order: some pair of representatives is comparable.
bool coset_bruhat_leq_induced(const ParabolicCoset& a, const ParabolicCoset& b);

/// Members of W_L w in enumeration order.
std::vector<WeylElt> coset_members(const ParabolicCoset& c);

/// Ordered by parabolic length, then by the minimal representative's word.
std::vector<ParabolicCoset> enumerate_cosets(const DatumPtr& datum, ParabolicSubset levi);

/// Exhaustive quotient property Z, plus a comparison against the order
/// re-derived from the closed point and property Z alone.
Violations quotient_property_z_check(const DatumPtr& datum, ParabolicSubset levi);

/// Position j (0-based) whose deletion gives a P-reduced word for w s_alpha.
/// Throws NotPReduced or NotDownward.
int quotient_exchange(const DatumPtr& datum, const Word& word, int alpha, ParabolicSubset levi);

}  // namespace bruhat
