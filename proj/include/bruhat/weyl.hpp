#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bruhat/root_datum.hpp"

namespace bruhat {

/// Sequence of simple-root indices, 0-based. Text form is 1-based.
using Word = std::vector<int>;

/// Parses "1,2,1"; "" and "e" give the empty word. Letters must lie in 1..rank.
Word parse_word(std::string_view text, int rank);
/// "1,2,1", or "e" for the empty word.
std::string format_word(const Word& w);

/// Weyl group element stored as the images of the simple roots.
class WeylElt {
 public:
  WeylElt() = default;
  static WeylElt identity(DatumPtr datum);
  static WeylElt simple(DatumPtr datum, int i);
  static WeylElt from_word(DatumPtr datum, const Word& word);

  const DatumPtr& datum() const { return datum_; }
  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<Root>& images() const { return images_; }

  /// Linear action; act() throws NotARoot for non-roots.
  Root act(const Root& beta) const;
  Root act_unchecked(const Root& beta) const;

  /// Throws DatumMismatch when the data differ.
  WeylElt operator*(const WeylElt& o) const;
  WeylElt inverse() const;
  WeylElt times_simple(int i) const;       // w s_i
  WeylElt simple_times(int i) const;       // s_i w

  int length() const;
  bool is_identity() const;
  /// Lexicographically smallest reduced word.
  Word reduced_word() const;
  std::string to_string() const { return format_word(reduced_word()); }

  /// Flattened images; a total order usable as a map key.
  std::vector<int> key() const;

  bool operator==(const WeylElt& o) const { return images_ == o.images_; }
  bool operator<(const WeylElt& o) const { return images_ < o.images_; }

 private:
  WeylElt inverse_by_search() const;

  WeylElt(DatumPtr d, std::vector<Root> images) : datum_(std::move(d)), images_(std::move(images)) {}

  DatumPtr datum_;
  std::vector<Root> images_;
};

void require_same_datum(const WeylElt& a, const WeylElt& b);

enum class Direction { Up, Down };

/// Up iff w(alpha) > 0. Throws NotPositiveRoot.
Direction descent_direction(const WeylElt& w, const Root& alpha);

/// Prefix test: every w_j sends the next letter's simple root to a positive root.
bool is_reduced(const DatumPtr& datum, const Word& word);

/// All reduced words of w in lexicographic order.
std::vector<Word> all_reduced_words(const WeylElt& w);

/// Classical subword test against the lex-min reduced word of v.
bool bruhat_leq_subword(const WeylElt& u, const WeylElt& v);
/// Same test against a caller-supplied reduced word of v.
bool bruhat_leq_subword(const WeylElt& u, const WeylElt& v, const Word& reduced_word_of_v);

/// Lifting recursion on the length of v.
bool bruhat_leq(const WeylElt& u, const WeylElt& v);

/// Position j (0-based) such that deleting word[j] gives a reduced word for
/// w s_alpha. Throws NotReduced or NotADescent.
int exchange(const DatumPtr& datum, const Word& word, int alpha);

/// All of W ordered by length, then by lex-min reduced word.
std::vector<WeylElt> enumerate(const DatumPtr& datum);

/// Reflection in a (positive or negative) root, built by conjugation.
WeylElt reflection(const DatumPtr& datum, const Root& beta);

/// Longest element of the parabolic subgroup generated by `levi`.
WeylElt longest_element(const DatumPtr& datum, ParabolicSubset levi);
WeylElt longest_element(const DatumPtr& datum);

/// theta(w) for the datum's diagram involution.
WeylElt twist(const WeylElt& w);

}  // namespace bruhat
