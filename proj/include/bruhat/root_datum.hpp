#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat/error.hpp"

namespace bruhat {

using IntMatrix = std::vector<std::vector<int>>;

/// Cartan matrix with entry(i, j) = <alpha_i, alpha_j^vee>.
///
/// Built-in types follow Bourbaki numbering: B_n has alpha_n short, C_n has
/// alpha_n long, G_2 has alpha_1 short. Reducible types are block diagonal.
struct CartanSpec {
  IntMatrix entries;
  std::vector<std::string> labels;
  /// "A2", "A1xA1", ... for built-in types; empty for explicit matrices.
  std::string type_name;

  int rank() const { return static_cast<int>(entries.size()); }
};

/// Parses "A2", "B3", "G2", "A1xA1", "A2xA2" (factors joined by 'x').
CartanSpec cartan_of_type(std::string_view type);

/// Cartan spec from an explicit matrix; labels default to a1..an.
CartanSpec cartan_from_matrix(IntMatrix entries);

/// Finite-type test: off-diagonal pair products in {0,1,2,3} and every
/// principal minor positive. Returns a reason on failure, empty otherwise.
std::string finite_type_defect(const IntMatrix& cartan);

enum class Isogeny { SimplyConnected, Adjoint, Lattice };

/// Integer coefficient vector over the simple roots.
struct Root {
  std::vector<int> coords;

  Root() = default;
  explicit Root(std::vector<int> c) : coords(std::move(c)) {}

  int rank() const { return static_cast<int>(coords.size()); }
  int height() const;
  bool is_positive() const;  // all coefficients >= 0, not all zero
  bool is_negative() const;
  bool is_zero() const;
  Root operator-() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root scaled(int k) const;
  /// Support: indices with a nonzero coefficient.
  std::vector<int> support() const;

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;
};

std::string to_string(const Root& r);

/// Subset of simple-root indices (0-based), stored as a bitmask.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  explicit ParabolicSubset(std::uint64_t mask) : mask_(mask) {}
  static ParabolicSubset of(const std::vector<int>& members);
  static ParabolicSubset full(int rank);

  bool contains(int i) const { return (mask_ >> i) & 1u; }
  std::uint64_t mask() const { return mask_; }
  std::vector<int> members() const;
  bool empty() const { return mask_ == 0; }

  auto operator<=>(const ParabolicSubset&) const = default;
  bool operator==(const ParabolicSubset&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

/// All 2^rank subsets in mask order.
std::vector<ParabolicSubset> all_parabolic_subsets(int rank);

std::string to_string(const ParabolicSubset& s);

enum class RootClass { Levi, Nilradical, OppositeNilradical };

std::string_view to_string(RootClass c);

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;

/// Based root datum with an optional diagram involution.
///
/// The torus is semisimple: X_*(T) and X^*(T) both have rank equal to the
/// number of simple roots. coroot_images()[i] expresses alpha_i^vee in a basis
/// of X_*(T), root_images()[i] expresses alpha_i in the dual basis of X^*(T).
class RootDatum {
 public:
  /// Validates the Cartan matrix, lattices and twist. `twist` holds 0-based
  /// images; empty means identity. `coroots` is used only for Isogeny::Lattice.
  static DatumPtr build(CartanSpec spec, Isogeny isogeny, std::vector<int> twist = {},
                        IntMatrix coroots = {});
  static DatumPtr of_type(std::string_view type, Isogeny isogeny = Isogeny::SimplyConnected,
                          std::vector<int> twist = {});

  int rank() const { return spec_.rank(); }
  const CartanSpec& cartan_spec() const { return spec_; }
  int cartan(int i, int j) const { return spec_.entries[i][j]; }
  Isogeny isogeny() const { return isogeny_; }
  const IntMatrix& coroot_images() const { return coroot_images_; }
  const IntMatrix& root_images() const { return root_images_; }
  const std::vector<int>& twist() const { return twist_; }
  bool twist_is_identity() const;

  /// Order of s_i s_j (1 when i == j).
  int coxeter_order(int i, int j) const;

  Root simple_root(int i) const;
  Root zero_root() const;
  bool is_root(const Root& r) const;
  /// <beta, alpha_i^vee>.
  int pairing(const Root& beta, int i) const;
  /// s_i(beta); throws NotARoot unless beta is a root.
  Root reflect(int i, const Root& beta) const;
  /// Linear reflection without the root-membership check.
  Root reflect_unchecked(int i, const Root& beta) const;
  /// Diagram involution applied to a root (or any lattice vector).
  Root twist_root(const Root& beta) const;

  /// Positive roots ordered by height, then by coordinates descending.
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Index of a positive root in positive_roots(), or -1.
  int positive_index(const Root& r) const;

  RootClass classify(const Root& beta, ParabolicSubset levi) const;

  /// m_alpha = alpha^vee(-1) is trivial iff alpha_i^vee is divisible by 2 in X_*.
  bool is_m_alpha_trivial(int i) const;

  /// Block-diagonal product of two data (lattices multiply); twist is the
  /// concatenation unless `swap` is set, in which case the two blocks are
  /// exchanged (requires identical factors).
  static DatumPtr product(const RootDatum& a, const RootDatum& b, bool swap);

  bool operator==(const RootDatum& o) const;

  /// `rootdatum v1` text, terminated by a newline.
  std::string to_text() const;
  static DatumPtr from_text(std::string_view text);

 private:
  RootDatum() = default;

  CartanSpec spec_;
  Isogeny isogeny_ = Isogeny::SimplyConnected;
  IntMatrix coroot_images_;
  IntMatrix root_images_;
  std::vector<int> twist_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, int> positive_index_;
};

/// Nontrivial diagram involution for A_n, D_n, E_6 or a product of two equal
/// factors (swapping them). Throws InvalidTwist if the type has none.
std::vector<int> flip_twist(const CartanSpec& spec);

}  // namespace bruhat
