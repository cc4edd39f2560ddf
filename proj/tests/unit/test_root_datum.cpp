#include "bruhat/root_datum.hpp"

#include <set>

#include "doctest.h"

using namespace bruhat;

namespace {

Root R(std::vector<int> c) { return Root(std::move(c)); }

}  // namespace

TEST_CASE("built-in Cartan matrices") {
  CHECK(cartan_of_type("B2").entries == IntMatrix{{2, -2}, {-1, 2}});
  CHECK(cartan_of_type("C2").entries == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(cartan_of_type("G2").entries == IntMatrix{{2, -1}, {-3, 2}});
  CHECK(cartan_of_type("A1xA1").entries == IntMatrix{{2, 0}, {0, 2}});
  CHECK(cartan_of_type("D4").entries[1][3] == -1);
  CHECK(cartan_of_type("F4").entries[1][2] == -2);
  CHECK_THROWS_AS(cartan_of_type("Q3"), Error);
  CHECK_THROWS_AS(cartan_of_type("E9"), Error);
  CHECK_THROWS_AS(cartan_of_type("A"), Error);
}

TEST_CASE("finite type check") {
  CHECK(finite_type_defect(cartan_of_type("E8").entries).empty());
  // affine A1
  CHECK_FALSE(finite_type_defect({{2, -2}, {-2, 2}}).empty());
  // affine A2 (cycle)
  CHECK_FALSE(finite_type_defect({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}).empty());
  CHECK_FALSE(finite_type_defect({{2, -1}, {0, 2}}).empty());
  CHECK_THROWS_AS(RootDatum::build(cartan_from_matrix({{2, -4}, {-1, 2}}), Isogeny::SimplyConnected), Error);
}

TEST_CASE("build: lattices and twists") {
  auto sc = RootDatum::of_type("A1");
  CHECK(sc->coroot_images() == IntMatrix{{1}});
  CHECK(sc->root_images() == IntMatrix{{2}});
  auto ad = RootDatum::of_type("A1", Isogeny::Adjoint);
  CHECK(ad->coroot_images() == IntMatrix{{2}});
  CHECK(ad->root_images() == IntMatrix{{1}});

  auto a2 = RootDatum::of_type("A2", Isogeny::Adjoint, {1, 0});
  CHECK(a2->twist() == std::vector<int>{1, 0});

  try {
    RootDatum::of_type("B2", Isogeny::Adjoint, {1, 0});
    FAIL("expected InvalidTwist");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidTwist);
  }
  CHECK_THROWS_AS(RootDatum::of_type("A3", Isogeny::SimplyConnected, {1, 2, 0}), Error);

  // SO(3)-like lattice for A1 given explicitly equals the adjoint one.
  auto lat = RootDatum::build(cartan_of_type("A1"), Isogeny::Lattice, {}, {{2}});
  CHECK(lat->root_images() == IntMatrix{{1}});
  // alpha^vee = 3 e is not compatible with <alpha, alpha^vee> = 2.
  try {
    RootDatum::build(cartan_of_type("A1"), Isogeny::Lattice, {}, {{3}});
    FAIL("expected InvalidLattice");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidLattice);
  }
}

TEST_CASE("pairing reproduces the Cartan matrix for every lattice") {
  for (const char* t : {"A2", "B2", "G2", "C3", "A1xA1"}) {
    for (Isogeny iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
      auto d = RootDatum::of_type(t, iso);
      const int n = d->rank();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int s = 0;
          for (int k = 0; k < n; ++k) s += d->root_images()[i][k] * d->coroot_images()[j][k];
          CHECK(s == d->cartan(i, j));
        }
    }
  }
}

TEST_CASE("reflect") {
  auto a2 = RootDatum::of_type("A2");
  CHECK(a2->reflect(0, R({1, 0})) == R({-1, 0}));
  CHECK(a2->reflect(0, R({0, 1})) == R({1, 1}));
  auto b2 = RootDatum::of_type("B2");
  CHECK(b2->reflect(1, R({1, 0})) == R({1, 2}));
  CHECK_THROWS_AS(a2->reflect(0, R({2, 0})), Error);
  for (const char* t : {"A3", "B3", "G2", "C3"}) {
    auto d = RootDatum::of_type(t);
    for (const Root& b : d->positive_roots())
      for (int i = 0; i < d->rank(); ++i) {
        CHECK(d->reflect(i, d->reflect(i, b)) == b);
        CHECK(d->reflect(i, -b) == -d->reflect(i, b));
      }
  }
}

TEST_CASE("positive roots: counts and order") {
  auto a2 = RootDatum::of_type("A2");
  CHECK(a2->positive_roots() == std::vector<Root>{R({1, 0}), R({0, 1}), R({1, 1})});
  CHECK(RootDatum::of_type("A1")->positive_roots().size() == 1);
  std::vector<std::pair<const char*, std::size_t>> counts{{"A3", 6},  {"B2", 4},  {"B3", 9},  {"C3", 9},
                                                          {"G2", 6},  {"D4", 12}, {"F4", 24}, {"E6", 36},
                                                          {"A1xA1", 2}, {"A2xA2", 6}};
  for (auto [t, c] : counts) CHECK(RootDatum::of_type(t)->positive_roots().size() == c);
  auto b2 = RootDatum::of_type("B2");
  std::set<std::vector<int>> got;
  for (const auto& r : b2->positive_roots()) got.insert(r.coords);
  CHECK(got == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  auto g2 = RootDatum::of_type("G2");
  CHECK(g2->is_root(R({3, 2})));
  CHECK(g2->is_root(R({3, 1})));
  CHECK_FALSE(g2->is_root(R({1, 3})));
}

TEST_CASE("positive roots descend to simple roots") {
  for (const char* t : {"A3", "B3", "G2", "F4"}) {
    auto d = RootDatum::of_type(t);
    for (const Root& b : d->positive_roots()) {
      if (b.height() == 1) continue;
      bool found = false;
      for (int i = 0; i < d->rank(); ++i) {
        Root r = d->reflect(i, b);
        found = found || (r.is_positive() && r.height() < b.height());
      }
      CHECK(found);
    }
  }
}

TEST_CASE("classify") {
  auto a2 = RootDatum::of_type("A2");
  auto I = ParabolicSubset::of({0});
  CHECK(a2->classify(R({1, 0}), I) == RootClass::Levi);
  CHECK(a2->classify(R({1, 1}), I) == RootClass::Nilradical);
  CHECK(a2->classify(R({0, -1}), I) == RootClass::OppositeNilradical);
  CHECK(a2->classify(R({-1, 0}), I) == RootClass::Levi);
  auto b3 = RootDatum::of_type("B3");
  for (auto S : all_parabolic_subsets(3)) {
    for (const Root& b : b3->positive_roots()) {
      auto c = b3->classify(b, S);
      auto cn = b3->classify(-b, S);
      CHECK((c == RootClass::Levi) == (cn == RootClass::Levi));
      if (c == RootClass::Nilradical) CHECK(cn == RootClass::OppositeNilradical);
    }
  }
  CHECK_THROWS_AS(a2->classify(R({2, 1}), I), Error);
}

TEST_CASE("m_alpha triviality") {
  CHECK_FALSE(RootDatum::of_type("A1")->is_m_alpha_trivial(0));
  CHECK(RootDatum::of_type("A1", Isogeny::Adjoint)->is_m_alpha_trivial(0));
  auto c2 = RootDatum::of_type("C2");
  CHECK_FALSE(c2->is_m_alpha_trivial(0));
  CHECK_FALSE(c2->is_m_alpha_trivial(1));
  // Adjoint C2 (= SO(5)): long coroot alpha_2^vee = alpha_2^vee pairs (-1,2) -> not all even.
  auto c2ad = RootDatum::of_type("C2", Isogeny::Adjoint);
  CHECK(c2ad->coroot_images()[1] == std::vector<int>{-1, 2});
  CHECK_FALSE(c2ad->is_m_alpha_trivial(1));
  CHECK(c2ad->coroot_images()[0] == std::vector<int>{2, -2});
  CHECK(c2ad->is_m_alpha_trivial(0));
}

TEST_CASE("flip twists and products") {
  CHECK(flip_twist(cartan_of_type("A3")) == std::vector<int>{2, 1, 0});
  CHECK(flip_twist(cartan_of_type("D4")) == std::vector<int>{0, 1, 3, 2});
  CHECK(flip_twist(cartan_of_type("E6")) == std::vector<int>{5, 1, 4, 3, 2, 0});
  CHECK(flip_twist(cartan_of_type("A2xA2")) == std::vector<int>{2, 3, 0, 1});
  CHECK_THROWS_AS(flip_twist(cartan_of_type("B3")), Error);
  auto a1 = RootDatum::of_type("A1");
  auto p = RootDatum::product(*a1, *a1, true);
  CHECK(p->rank() == 2);
  CHECK(p->twist() == std::vector<int>{1, 0});
  CHECK(p->cartan_spec().type_name == "A1xA1");
  auto q = RootDatum::product(*a1, *RootDatum::of_type("A1", Isogeny::Adjoint), false);
  CHECK(q->isogeny() == Isogeny::Lattice);
  CHECK(q->coroot_images() == IntMatrix{{1, 0}, {0, 2}});
}

TEST_CASE("rootdatum text round trip") {
  auto d = RootDatum::of_type("A2", Isogeny::Adjoint, {1, 0});
  auto text = d->to_text();
  CHECK(text == "rootdatum v1\ntype A2\nisogeny adjoint\ntwist 2 1\n");
  auto back = RootDatum::from_text(text);
  CHECK(*back == *d);
  CHECK(back->to_text() == text);

  auto custom = RootDatum::from_text(
      "# comment\nrootdatum v1\ncartan 2\n 2 -1\n -1 2\nisogeny lattice\n1 0\n0 1\ntwist id\n");
  CHECK(custom->rank() == 2);
  CHECK(RootDatum::from_text(custom->to_text())->to_text() == custom->to_text());
  CHECK(RootDatum::from_text("rootdatum v1\ntype A3\nisogeny simply_connected\ntwist flip\n")->twist() ==
        std::vector<int>{2, 1, 0});
  try {
    RootDatum::from_text("rootdatum v1\ntype A2\nisogeny bogus\ntwist id\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  CHECK_THROWS_AS(RootDatum::from_text("rootdatum v1\ncartan 2\n2 -1\nisogeny adjoint\ntwist id\n"), Error);
}
