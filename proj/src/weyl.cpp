#include "bruhat/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

namespace bruhat {

Word parse_word(std::string_view text, int rank) {
  Word w;
  if (text.empty() || text == "e") return w;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(ErrorKind::ParseError, "bad word '" + std::string(text) + "'");
    int letter = std::stoi(std::string(tok));
    if (letter < 1 || letter > rank)
      throw Error(ErrorKind::ParseError, "letter " + std::string(tok) + " outside 1.." + std::to_string(rank));
    w.push_back(letter - 1);
    if (end == text.size()) break;
    start = end + 1;
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k] + 1);
  return s;
}

WeylElt WeylElt::identity(DatumPtr datum) {
  std::vector<Root> images;
  for (int i = 0; i < datum->rank(); ++i) images.push_back(datum->simple_root(i));
  return WeylElt(std::move(datum), std::move(images));
}

WeylElt WeylElt::simple(DatumPtr datum, int i) { return identity(std::move(datum)).times_simple(i); }

WeylElt WeylElt::from_word(DatumPtr datum, const Word& word) {
  WeylElt w = identity(std::move(datum));
  for (int i : word) {
    if (i < 0 || i >= w.rank()) throw Error(ErrorKind::NotARoot, "letter out of range");
    w = w.times_simple(i);
  }
  return w;
}

Root WeylElt::act_unchecked(const Root& beta) const {
  Root r = datum_->zero_root();
  for (int j = 0; j < rank(); ++j) {
    if (beta.coords[j] == 0) continue;
    for (int k = 0; k < rank(); ++k) r.coords[k] += beta.coords[j] * images_[j].coords[k];
  }
  return r;
}

Root WeylElt::act(const Root& beta) const {
  if (!datum_->is_root(beta)) throw Error(ErrorKind::NotARoot, bruhat::to_string(beta));
  return act_unchecked(beta);
}

void require_same_datum(const WeylElt& a, const WeylElt& b) {
  if (a.datum() != b.datum() && !(a.datum() && b.datum() && *a.datum() == *b.datum()))
    throw Error(ErrorKind::DatumMismatch, "elements belong to different root data");
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  require_same_datum(*this, o);
  std::vector<Root> images;
  images.reserve(o.images_.size());
  for (const Root& r : o.images_) images.push_back(act_unchecked(r));
  return WeylElt(datum_, std::move(images));
}

WeylElt WeylElt::times_simple(int i) const {
  std::vector<Root> images = images_;
  for (int j = 0; j < rank(); ++j) {
    int c = datum_->cartan(j, i);
    if (c != 0) images[j] = images_[j] - images_[i].scaled(c);
  }
  return WeylElt(datum_, std::move(images));
}

WeylElt WeylElt::simple_times(int i) const {
  std::vector<Root> images;
  images.reserve(images_.size());
  for (const Root& r : images_) images.push_back(datum_->reflect_unchecked(i, r));
  return WeylElt(datum_, std::move(images));
}

WeylElt WeylElt::inverse() const { return inverse_by_search(); }

int WeylElt::length() const {
  int n = 0;
  for (const Root& b : datum_->positive_roots())
    if (act_unchecked(b).is_negative()) ++n;
  return n;
}

bool WeylElt::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (images_[i] != datum_->simple_root(i)) return false;
  return true;
}

Word WeylElt::reduced_word() const {
  // Smallest left descent of w is the smallest i with w^{-1}(alpha_i) < 0.
  Word out;
  WeylElt y = inverse_by_search();
  while (!y.is_identity()) {
    int i = 0;
    while (!y.images_[i].is_negative()) ++i;
    out.push_back(i);
    y = y.times_simple(i);
  }
  return out;
}

WeylElt WeylElt::inverse_by_search() const {
  // Right descents of w peel off a word for w; its reverse is w^{-1}.
  Word rev;
  WeylElt x = *this;
  while (!x.is_identity()) {
    int i = 0;
    while (!x.images_[i].is_negative()) ++i;
    rev.push_back(i);
    x = x.times_simple(i);
  }
  return from_word(datum_, rev);
}

std::vector<int> WeylElt::key() const {
  std::vector<int> k;
  k.reserve(images_.size() * images_.size());
  for (const Root& r : images_) k.insert(k.end(), r.coords.begin(), r.coords.end());
  return k;
}

Direction descent_direction(const WeylElt& w, const Root& alpha) {
  if (!alpha.is_positive() || !w.datum()->is_root(alpha))
    throw Error(ErrorKind::NotPositiveRoot, to_string(alpha));
  return w.act_unchecked(alpha).is_positive() ? Direction::Up : Direction::Down;
}

bool is_reduced(const DatumPtr& datum, const Word& word) {
  WeylElt w = WeylElt::identity(datum);
  for (int i : word) {
    if (i < 0 || i >= datum->rank()) return false;
    if (!w.images()[i].is_positive()) return false;
    w = w.times_simple(i);
  }
  return true;
}

namespace {

void collect_reduced_words(const WeylElt& y, Word& prefix, std::vector<Word>& out) {
  // y = w^{-1} of the remaining factor; left descents of w are negatives of y.
  if (y.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int i = 0; i < y.rank(); ++i) {
    if (!y.images()[i].is_negative()) continue;
    prefix.push_back(i);
    collect_reduced_words(y.times_simple(i), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> all_reduced_words(const WeylElt& w) {
  std::vector<Word> out;
  Word prefix;
  collect_reduced_words(w.inverse(), prefix, out);
  return out;
}

bool bruhat_leq_subword(const WeylElt& u, const WeylElt& v) {
  return bruhat_leq_subword(u, v, v.reduced_word());
}

bool bruhat_leq_subword(const WeylElt& u, const WeylElt& v, const Word& word) {
  require_same_datum(u, v);
  const int k = static_cast<int>(word.size());
  const int target = u.length();
  if (target > k) return false;
  if (k > 30) throw Error(ErrorKind::Mismatch, "word too long for subword enumeration");
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    if (std::popcount(mask) != target) continue;
    WeylElt x = WeylElt::identity(v.datum());
    for (int j = 0; j < k; ++j)
      if ((mask >> j) & 1u) x = x.times_simple(word[j]);
    if (x == u) return true;
  }
  return false;
}

bool bruhat_leq(const WeylElt& u, const WeylElt& v) {
  require_same_datum(u, v);
  WeylElt a = u;
  WeylElt b = v;
  while (true) {
    int i = 0;
    while (i < b.rank() && !b.images()[i].is_negative()) ++i;
    if (i == b.rank()) return a.is_identity();
    if (a.images()[i].is_negative()) a = a.times_simple(i);
    b = b.times_simple(i);
  }
}

int exchange(const DatumPtr& datum, const Word& word, int alpha) {
  if (!is_reduced(datum, word)) throw Error(ErrorKind::NotReduced, format_word(word));
  if (alpha < 0 || alpha >= datum->rank()) throw Error(ErrorKind::NotADescent, "simple index out of range");
  WeylElt w = WeylElt::from_word(datum, word);
  if (!w.images()[alpha].is_negative())
    throw Error(ErrorKind::NotADescent, "alpha_" + std::to_string(alpha + 1) + " is not a descent of " + format_word(word));
  Root beta = datum->simple_root(alpha);
  for (int j = static_cast<int>(word.size()) - 1; j >= 0; --j) {
    if (beta == datum->simple_root(word[j])) return j;
    beta = datum->reflect_unchecked(word[j], beta);
  }
  throw Error(ErrorKind::NotADescent, "no exchange position");  // unreachable for valid input
}

std::vector<WeylElt> enumerate(const DatumPtr& datum) {
  std::map<std::vector<int>, WeylElt> seen;
  std::vector<WeylElt> frontier{WeylElt::identity(datum)};
  seen.emplace(frontier[0].key(), frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const WeylElt& w : frontier) {
      for (int i = 0; i < datum->rank(); ++i) {
        WeylElt x = w.times_simple(i);
        if (seen.emplace(x.key(), x).second) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::pair<int, Word>, WeylElt>> keyed;
  for (auto& [k, w] : seen) keyed.push_back({{w.length(), w.reduced_word()}, w});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<WeylElt> out;
  out.reserve(keyed.size());
  for (auto& [k, w] : keyed) out.push_back(std::move(w));
  return out;
}

WeylElt reflection(const DatumPtr& datum, const Root& beta) {
  if (!datum->is_root(beta)) throw Error(ErrorKind::NotARoot, to_string(beta));
  Root b = beta.is_negative() ? -beta : beta;
  // Walk b down to a simple root, remembering the conjugating letters.
  Word path;
  while (b.height() > 1) {
    int j = 0;
    while (datum->pairing(b, j) <= 0) ++j;
    path.push_back(j);
    b = datum->reflect_unchecked(j, b);
  }
  int i = b.support().front();
  Word word(path.begin(), path.end());
  word.push_back(i);
  word.insert(word.end(), path.rbegin(), path.rend());
  return WeylElt::from_word(datum, word);
}

WeylElt longest_element(const DatumPtr& datum, ParabolicSubset levi) {
  WeylElt w = WeylElt::identity(datum);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < datum->rank(); ++i) {
      if (levi.contains(i) && w.images()[i].is_positive()) {
        w = w.times_simple(i);
        grew = true;
        break;
      }
    }
  }
  return w;
}

WeylElt longest_element(const DatumPtr& datum) {
  return longest_element(datum, ParabolicSubset::full(datum->rank()));
}

WeylElt twist(const WeylElt& w) {
  const auto& d = w.datum();
  Word word = w.reduced_word();
  for (int& i : word) i = d->twist()[i];
  return WeylElt::from_word(d, word);
}

}  // namespace bruhat
