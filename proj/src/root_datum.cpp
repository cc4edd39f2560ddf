#include "bruhat/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "text_lines.hpp"

namespace bruhat {

namespace {

// Exact rationals for the small lattice solves below.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d = 1) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Fraction operator+(const Fraction& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Fraction operator-(const Fraction& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Fraction operator*(const Fraction& o) const { return {num * o.num, den * o.den}; }
  Fraction operator/(const Fraction& o) const { return {num * o.den, den * o.num}; }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
};

using FracMatrix = std::vector<std::vector<Fraction>>;

// Inverse by Gauss-Jordan; returns false when singular.
bool invert(const IntMatrix& m, FracMatrix& out) {
  const int n = static_cast<int>(m.size());
  FracMatrix a(n, std::vector<Fraction>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Fraction(m[i][j]);
    a[i][n + i] = Fraction(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(a[pivot], a[col]);
    Fraction p = a[col][col];
    for (auto& x : a[col]) x = x / p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Fraction f = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  out.assign(n, std::vector<Fraction>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return true;
}

// Bareiss fraction-free determinant.
long long determinant(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix chain(int n) {
  IntMatrix m = identity_matrix(n);
  for (int i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

IntMatrix simple_type(char letter, int n) {
  switch (letter) {
    case 'A':
      if (n < 1) break;
      return chain(n);
    case 'B': {
      if (n < 2) break;
      IntMatrix m = chain(n);
      m[n - 2][n - 1] = -2;
      return m;
    }
    case 'C': {
      if (n < 2) break;
      IntMatrix m = chain(n);
      m[n - 1][n - 2] = -2;
      return m;
    }
    case 'D': {
      if (n < 3) break;
      IntMatrix m = chain(n);
      m[n - 2][n - 1] = m[n - 1][n - 2] = 0;
      m[n - 3][n - 1] = m[n - 1][n - 3] = -1;
      return m;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      IntMatrix m = identity_matrix(n);
      for (int i = 0; i < n; ++i) m[i][i] = 2;
      auto link = [&](int a, int b) { m[a - 1][b - 1] = m[b - 1][a - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      return m;
    }
    case 'F': {
      if (n != 4) break;
      IntMatrix m = chain(4);
      m[1][2] = -2;
      return m;
    }
    case 'G': {
      if (n != 2) break;
      return IntMatrix{{2, -1}, {-3, 2}};
    }
    default:
      break;
  }
  throw Error(ErrorKind::InvalidCartan, std::string("unknown type ") + letter + std::to_string(n));
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  IntMatrix out(n + m, std::vector<int>(n + m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out[n + i][n + j] = b[i][j];
  return out;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  return labels;
}

std::string_view isogeny_name(Isogeny iso) {
  switch (iso) {
    case Isogeny::SimplyConnected: return "simply_connected";
    case Isogeny::Adjoint: return "adjoint";
    case Isogeny::Lattice: return "lattice";
  }
  return "?";
}

}  // namespace

// ---------------------------------------------------------------- Cartan

CartanSpec cartan_of_type(std::string_view type) {
  CartanSpec spec;
  spec.type_name = std::string(type);
  std::size_t start = 0;
  bool any = false;
  while (start <= type.size()) {
    std::size_t end = type.find('x', start);
    if (end == std::string_view::npos) end = type.size();
    std::string_view part = type.substr(start, end - start);
    if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0])))
      throw Error(ErrorKind::InvalidCartan, "bad type string '" + std::string(type) + "'");
    int n = 0;
    for (char c : part.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::InvalidCartan, "bad type string '" + std::string(type) + "'");
      n = n * 10 + (c - '0');
    }
    spec.entries = any ? block_diagonal(spec.entries, simple_type(part[0], n)) : simple_type(part[0], n);
    any = true;
    start = end + 1;
    if (end == type.size()) break;
  }
  spec.labels = default_labels(spec.rank());
  return spec;
}

CartanSpec cartan_from_matrix(IntMatrix entries) {
  CartanSpec spec;
  spec.entries = std::move(entries);
  spec.labels = default_labels(spec.rank());
  return spec;
}

std::string finite_type_defect(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return "empty matrix";
  if (n > 16) return "rank too large";
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) return "matrix is not square";
  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 2) return "diagonal entry " + std::to_string(i + 1) + " is not 2";
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) return "positive off-diagonal entry";
      if ((a[i][j] == 0) != (a[j][i] == 0)) return "zero pattern is not symmetric";
      int p = a[i][j] * a[j][i];
      if (p < 0 || p > 3) return "off-diagonal product outside {0,1,2,3}";
    }
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    IntMatrix sub(idx.size(), std::vector<int>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = a[idx[r]][idx[c]];
    if (determinant(sub) <= 0) return "principal minor not positive";
  }
  return {};
}

// ---------------------------------------------------------------- Root

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_positive() const {
  bool nonzero = false;
  for (int c : coords) {
    if (c < 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

bool Root::is_negative() const {
  bool nonzero = false;
  for (int c : coords) {
    if (c > 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

bool Root::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const { return scaled(-1); }

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Root Root::operator-(const Root& o) const { return *this + (-o); }

Root Root::scaled(int k) const {
  Root r = *this;
  for (int& c : r.coords) c *= k;
  return r;
}

std::vector<int> Root::support() const {
  std::vector<int> s;
  for (int i = 0; i < rank(); ++i)
    if (coords[i] != 0) s.push_back(i);
  return s;
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.coords.size(); ++i) os << (i ? "," : "") << r.coords[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- ParabolicSubset

ParabolicSubset ParabolicSubset::of(const std::vector<int>& members) {
  std::uint64_t mask = 0;
  for (int i : members) mask |= std::uint64_t{1} << i;
  return ParabolicSubset(mask);
}

ParabolicSubset ParabolicSubset::full(int rank) {
  return ParabolicSubset(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
}

std::vector<int> ParabolicSubset::members() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<ParabolicSubset> all_parabolic_subsets(int rank) {
  std::vector<ParabolicSubset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << rank); ++m) out.emplace_back(m);
  return out;
}

std::string to_string(const ParabolicSubset& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    out += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string_view to_string(RootClass c) {
  switch (c) {
    case RootClass::Levi: return "Levi";
    case RootClass::Nilradical: return "Nilradical";
    case RootClass::OppositeNilradical: return "OppositeNilradical";
  }
  return "?";
}

// ---------------------------------------------------------------- RootDatum

DatumPtr RootDatum::build(CartanSpec spec, Isogeny isogeny, std::vector<int> twist, IntMatrix coroots) {
  if (auto defect = finite_type_defect(spec.entries); !defect.empty())
    throw Error(ErrorKind::InvalidCartan, defect);
  const int n = spec.rank();
  if (spec.labels.size() != static_cast<std::size_t>(n)) spec.labels = default_labels(n);

  if (twist.empty()) {
    twist.resize(n);
    std::iota(twist.begin(), twist.end(), 0);
  }
  if (static_cast<int>(twist.size()) != n) throw Error(ErrorKind::InvalidTwist, "twist has wrong length");
  for (int i = 0; i < n; ++i) {
    if (twist[i] < 0 || twist[i] >= n) throw Error(ErrorKind::InvalidTwist, "twist image out of range");
    if (twist[twist[i]] != i) throw Error(ErrorKind::InvalidTwist, "twist is not an involution");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (spec.entries[twist[i]][twist[j]] != spec.entries[i][j])
        throw Error(ErrorKind::InvalidTwist, "twist does not preserve the Cartan matrix");

  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->isogeny_ = isogeny;
  d->twist_ = twist;
  const IntMatrix& a = spec.entries;

  switch (isogeny) {
    case Isogeny::SimplyConnected:
      d->coroot_images_ = identity_matrix(n);
      d->root_images_ = a;
      break;
    case Isogeny::Adjoint:
      d->root_images_ = identity_matrix(n);
      d->coroot_images_.assign(n, std::vector<int>(n));
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) d->coroot_images_[j][i] = a[i][j];
      break;
    case Isogeny::Lattice: {
      if (static_cast<int>(coroots.size()) != n)
        throw Error(ErrorKind::InvalidLattice, "expected one coroot image per simple root");
      for (const auto& row : coroots)
        if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidLattice, "coroot image has wrong length");
      FracMatrix cinv;
      if (!invert(coroots, cinv)) throw Error(ErrorKind::InvalidLattice, "coroot images are linearly dependent");
      // roots R solve R * C^T = A, i.e. R = A * (C^{-1})^T.
      d->root_images_.assign(n, std::vector<int>(n));
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
          Fraction s(0);
          for (int j = 0; j < n; ++j) s = s + Fraction(a[i][j]) * cinv[k][j];
          if (!s.is_integer()) throw Error(ErrorKind::InvalidLattice, "roots are not integral on the cocharacter lattice");
          d->root_images_[i][k] = static_cast<int>(s.num);
        }
      }
      // The twist must carry X_* to itself: e_k = sum_i cinv[k][i] c_i.
      for (int k = 0; k < n; ++k) {
        for (int m = 0; m < n; ++m) {
          Fraction s(0);
          for (int i = 0; i < n; ++i) s = s + cinv[k][i] * Fraction(coroots[twist[i]][m]);
          if (!s.is_integer()) throw Error(ErrorKind::InvalidTwist, "twist does not preserve the cocharacter lattice");
        }
      }
      d->coroot_images_ = std::move(coroots);
      break;
    }
  }
  d->spec_ = std::move(spec);

  // Positive roots by closure under simple reflections.
  std::set<std::vector<int>> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root r = d->simple_root(i);
    seen.insert(r.coords);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier) {
      for (int i = 0; i < n; ++i) {
        Root r = d->reflect_unchecked(i, b);
        if (r.is_positive() && seen.insert(r.coords).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& c : seen) d->positive_.emplace_back(c);
  std::sort(d->positive_.begin(), d->positive_.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coords > y.coords;
  });
  for (std::size_t k = 0; k < d->positive_.size(); ++k) d->positive_index_[d->positive_[k].coords] = static_cast<int>(k);
  return d;
}

DatumPtr RootDatum::of_type(std::string_view type, Isogeny isogeny, std::vector<int> twist) {
  return build(cartan_of_type(type), isogeny, std::move(twist));
}

bool RootDatum::twist_is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (twist_[i] != i) return false;
  return true;
}

int RootDatum::coxeter_order(int i, int j) const {
  if (i == j) return 1;
  switch (cartan(i, j) * cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  return 0;
}

Root RootDatum::simple_root(int i) const {
  Root r(std::vector<int>(rank(), 0));
  r.coords[i] = 1;
  return r;
}

Root RootDatum::zero_root() const { return Root(std::vector<int>(rank(), 0)); }

int RootDatum::positive_index(const Root& r) const {
  auto it = positive_index_.find(r.coords);
  return it == positive_index_.end() ? -1 : it->second;
}

bool RootDatum::is_root(const Root& r) const {
  if (r.rank() != rank()) return false;
  if (r.is_positive()) return positive_index(r) >= 0;
  if (r.is_negative()) return positive_index(-r) >= 0;
  return false;
}

int RootDatum::pairing(const Root& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += beta.coords[j] * spec_.entries[j][i];
  return s;
}

Root RootDatum::reflect_unchecked(int i, const Root& beta) const {
  Root r = beta;
  r.coords[i] -= pairing(beta, i);
  return r;
}

Root RootDatum::reflect(int i, const Root& beta) const {
  if (!is_root(beta)) throw Error(ErrorKind::NotARoot, to_string(beta));
  return reflect_unchecked(i, beta);
}

Root RootDatum::twist_root(const Root& beta) const {
  Root r = zero_root();
  for (int i = 0; i < rank(); ++i) r.coords[twist_[i]] = beta.coords[i];
  return r;
}

RootClass RootDatum::classify(const Root& beta, ParabolicSubset levi) const {
  if (!is_root(beta)) throw Error(ErrorKind::NotARoot, to_string(beta));
  bool inside = true;
  for (int i : beta.support()) inside = inside && levi.contains(i);
  if (inside) return RootClass::Levi;
  return beta.is_positive() ? RootClass::Nilradical : RootClass::OppositeNilradical;
}

bool RootDatum::is_m_alpha_trivial(int i) const {
  return std::all_of(coroot_images_[i].begin(), coroot_images_[i].end(), [](int c) { return c % 2 == 0; });
}

DatumPtr RootDatum::product(const RootDatum& a, const RootDatum& b, bool swap) {
  const int n = a.rank();
  const int m = b.rank();
  CartanSpec spec;
  spec.entries = block_diagonal(a.spec_.entries, b.spec_.entries);
  if (!a.spec_.type_name.empty() && !b.spec_.type_name.empty())
    spec.type_name = a.spec_.type_name + "x" + b.spec_.type_name;
  spec.labels = default_labels(n + m);
  std::vector<int> twist(n + m);
  if (swap) {
    if (!(a == b)) throw Error(ErrorKind::InvalidTwist, "swap twist needs identical factors");
    for (int i = 0; i < n; ++i) {
      twist[i] = n + i;
      twist[n + i] = i;
    }
  } else {
    for (int i = 0; i < n; ++i) twist[i] = a.twist_[i];
    for (int i = 0; i < m; ++i) twist[n + i] = n + b.twist_[i];
  }
  Isogeny iso = a.isogeny_ == b.isogeny_ ? a.isogeny_ : Isogeny::Lattice;
  IntMatrix coroots;
  if (iso == Isogeny::Lattice) coroots = block_diagonal(a.coroot_images_, b.coroot_images_);
  return build(std::move(spec), iso, std::move(twist), std::move(coroots));
}

bool RootDatum::operator==(const RootDatum& o) const {
  return spec_.entries == o.spec_.entries && coroot_images_ == o.coroot_images_ && twist_ == o.twist_;
}

std::string RootDatum::to_text() const {
  std::ostringstream os;
  os << "rootdatum v1\n";
  bool builtin = false;
  if (!spec_.type_name.empty()) {
    try {
      builtin = cartan_of_type(spec_.type_name).entries == spec_.entries;
    } catch (const Error&) {
      builtin = false;
    }
  }
  if (builtin) {
    os << "type " << spec_.type_name << "\n";
  } else {
    os << "cartan " << rank() << "\n";
    for (const auto& row : spec_.entries) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
      os << "\n";
    }
  }
  os << "isogeny " << isogeny_name(isogeny_) << "\n";
  if (isogeny_ == Isogeny::Lattice) {
    for (const auto& row : coroot_images_) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
      os << "\n";
    }
  }
  if (twist_is_identity()) {
    os << "twist id\n";
  } else {
    os << "twist";
    for (int t : twist_) os << " " << t + 1;
    os << "\n";
  }
  return os.str();
}

DatumPtr RootDatum::from_text(std::string_view text) {
  auto lines = detail::tokenize(text);
  std::size_t pos = 0;
  DatumPtr d = detail::parse_root_datum(lines, pos);
  if (pos != lines.size()) detail::parse_fail(lines[pos], "unexpected trailing content");
  return d;
}

std::vector<int> flip_twist(const CartanSpec& spec) {
  const int n = spec.rank();
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  const std::string& name = spec.type_name;
  auto x = name.find('x');
  if (x != std::string::npos) {
    if (name.substr(0, x) == name.substr(x + 1) && n % 2 == 0) {
      for (int i = 0; i < n / 2; ++i) {
        t[i] = n / 2 + i;
        t[n / 2 + i] = i;
      }
      return t;
    }
    throw Error(ErrorKind::InvalidTwist, "no flip for type " + name);
  }
  if (name.size() >= 2 && name[0] == 'A' && n >= 2) {
    for (int i = 0; i < n; ++i) t[i] = n - 1 - i;
    return t;
  }
  if (name.size() >= 2 && name[0] == 'D' && n >= 3) {
    std::swap(t[n - 2], t[n - 1]);
    return t;
  }
  if (name == "E6") {
    std::swap(t[0], t[5]);
    std::swap(t[2], t[4]);
    return t;
  }
  throw Error(ErrorKind::InvalidTwist, "type " + (name.empty() ? std::string("(custom)") : name) + " has no diagram flip");
}

// ---------------------------------------------------------------- text helpers

namespace detail {

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    std::istringstream is{std::string(raw)};
    Line line;
    line.number = number;
    std::string tok;
    while (is >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty() && line.tokens[0][0] != '#') out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

void parse_fail(const Line& line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line.number) + ": " + what);
}

void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

int parse_int(const Line& line, const std::string& token) {
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) parse_fail(line, "expected integer, got '" + token + "'");
    return v;
  } catch (const std::logic_error&) {
    parse_fail(line, "expected integer, got '" + token + "'");
  }
}

void expect(const Line& line, std::string_view keyword, std::size_t count, bool at_least) {
  if (line.tokens.empty() || line.tokens[0] != keyword)
    parse_fail(line, "expected '" + std::string(keyword) + "'");
  if (at_least ? line.tokens.size() < count : line.tokens.size() != count)
    parse_fail(line, "wrong number of fields for '" + std::string(keyword) + "'");
}

DatumPtr parse_root_datum(const std::vector<Line>& lines, std::size_t& pos) {
  auto need = [&](std::string_view what) -> const Line& {
    if (pos >= lines.size()) parse_fail("unexpected end of input, expected " + std::string(what));
    return lines[pos];
  };
  auto read_rows = [&](int n) {
    IntMatrix m;
    for (int r = 0; r < n; ++r) {
      const Line& row = need("matrix row");
      if (static_cast<int>(row.tokens.size()) != n) parse_fail(row, "matrix row needs " + std::to_string(n) + " entries");
      std::vector<int> v;
      for (const auto& t : row.tokens) v.push_back(parse_int(row, t));
      m.push_back(std::move(v));
      ++pos;
    }
    return m;
  };

  const Line& header = need("rootdatum header");
  if (header.tokens != std::vector<std::string>{"rootdatum", "v1"}) parse_fail(header, "expected 'rootdatum v1'");
  ++pos;

  CartanSpec spec;
  const Line& shape = need("type or cartan");
  if (shape.tokens[0] == "type") {
    expect(shape, "type", 2);
    ++pos;
    try {
      spec = cartan_of_type(shape.tokens[1]);
    } catch (const Error& e) {
      parse_fail(shape, e.what());
    }
  } else if (shape.tokens[0] == "cartan") {
    expect(shape, "cartan", 2);
    int n = parse_int(shape, shape.tokens[1]);
    if (n <= 0 || n > 16) parse_fail(shape, "bad rank");
    ++pos;
    spec = cartan_from_matrix(read_rows(n));
  } else {
    parse_fail(shape, "expected 'type' or 'cartan'");
  }

  const Line& iso_line = need("isogeny");
  expect(iso_line, "isogeny", 2);
  ++pos;
  Isogeny iso;
  IntMatrix coroots;
  const std::string& iso_name = iso_line.tokens[1];
  if (iso_name == "simply_connected") {
    iso = Isogeny::SimplyConnected;
  } else if (iso_name == "adjoint") {
    iso = Isogeny::Adjoint;
  } else if (iso_name == "lattice") {
    iso = Isogeny::Lattice;
    coroots = read_rows(spec.rank());
  } else {
    parse_fail(iso_line, "unknown isogeny '" + iso_name + "'");
  }

  const Line& tw = need("twist");
  expect(tw, "twist", 2, true);
  ++pos;
  std::vector<int> twist;
  if (tw.tokens.size() == 2 && tw.tokens[1] == "id") {
    twist.clear();
  } else if (tw.tokens.size() == 2 && tw.tokens[1] == "flip") {
    try {
      twist = flip_twist(spec);
    } catch (const Error& e) {
      parse_fail(tw, e.what());
    }
  } else {
    for (std::size_t k = 1; k < tw.tokens.size(); ++k) twist.push_back(parse_int(tw, tw.tokens[k]) - 1);
  }
  if (pos < lines.size() && lines[pos].tokens.size() == 1 && lines[pos].tokens[0] == "end") ++pos;
  return RootDatum::build(std::move(spec), iso, std::move(twist), std::move(coroots));
}

}  // namespace detail

}  // namespace bruhat
