#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klr/crystal.hpp"
#include "quivers.hpp"

using namespace klr;

TEST_CASE("highest element basics") {
  CrystalModel m(q_a2());
  CrystalElement top = m.highest();
  for (int i = 0; i < 2; ++i) {
    CHECK(!m.apply_e(i, top).has_value());
    CHECK(m.eps(i, top) == 0);
    CHECK(m.eps_star(i, top) == 0);
  }
  CHECK(m.weight_beta(top) == Weight{0, 0});
}

TEST_CASE("sl2 string statistics") {
  CrystalModel m(q_sl2());
  CrystalElement b = m.highest();
  for (int n = 1; n <= 6; ++n) {
    b = m.apply_f(0, b);
    CHECK(m.eps(0, b) == n);
    CHECK(m.eps_star(0, b) == n);
    CHECK(m.weight_beta(b) == Weight{n});
  }
  auto up = m.apply_e(0, b);
  REQUIRE(up.has_value());
  CHECK(m.eps(0, *up) == 5);
}

TEST_CASE("partial inverse and string consistency") {
  CrystalModel m(q_a2());
  CrystalElement b = m.highest();
  std::vector<int> letters{1, 0, 1, 0, 0};
  for (int l : letters) {
    CrystalElement c = m.apply_f(l, b);
    auto back = m.apply_e(l, c);
    REQUIRE(back.has_value());
    CHECK(*back == b);
    CHECK(m.string_consistent(c));
    b = std::move(c);
  }
}

TEST_CASE("A2 rank statistics from the spec") {
  CrystalModel m(q_a2());
  CrystalElement f2 = m.apply_f(1, m.highest());
  CHECK(m.eps(0, f2) == 0);
  CHECK(m.phi(0, f2) == 1);
  CHECK(m.eps_star(0, f2) == 0);
  CrystalElement x = m.apply_f(0, f2);  // f_1 f_2 top
  CHECK(x.coords == std::vector<int>{0, 1, 1});
  CHECK(m.eps(0, x) == 1);
  CHECK(m.eps(1, x) == 0);
  CHECK(m.eps_star(0, x) == 0);
  CHECK(m.eps_star(1, x) == 1);
  CrystalElement y = m.apply_f(1, m.apply_f(0, m.highest()));  // f_2 f_1 top
  CHECK(m.eps(0, y) == 0);
  CHECK(m.eps(1, y) == 1);
  CHECK(m.eps_star(0, y) == 1);
  CHECK(!(x == y));
}

TEST_CASE("star operators raise the star statistic") {
  for (const Quiver& q : {q_a2(), q_kronecker(), q_a3()}) {
    CrystalModel m(q);
    CrystalTable table(m, 4);
    for (int h = 0; h <= 3; ++h)
      for (const Weight& w : table.weights_of_height(h))
        for (const CrystalElement& b : table.at(w))
          for (int i = 0; i < q.size(); ++i) {
            CrystalElement c = m.apply_f_star(i, b);
            CHECK(m.eps_star(i, c) == m.eps_star(i, b) + 1);
            auto back = m.apply_e_star(i, c);
            REQUIRE(back.has_value());
            CHECK(*back == b);
            CHECK(table.contains(c));
          }
  }
}

TEST_CASE("enumeration counts") {
  CrystalModel a2(q_a2());
  CrystalTable t(a2, 4);
  CHECK(t.at({1, 1}).size() == 2);
  CHECK(t.at({2, 1}).size() == 2);
  CHECK(t.at({2, 2}).size() == 3);
  CHECK(t.at({4, 0}).size() == 1);

  CrystalModel kr(q_kronecker());
  CrystalTable tk(kr, 3);
  CHECK(tk.at({1, 1}).size() == 2);

  CrystalModel s(q_sl2());
  CrystalTable ts(s, 5);
  for (int h = 0; h <= 5; ++h) CHECK(ts.at({h}).size() == 1);

  CHECK_THROWS_AS(t.at({8, 8}), CapError);
}

TEST_CASE("saito reflections: spec examples") {
  CrystalModel m(q_a2());
  CrystalElement top = m.highest();
  CHECK(m.saito_reflect(0, top) == top);
  CHECK(m.saito_reflect(1, top) == top);

  CrystalElement f2 = m.apply_f(1, top);
  CrystalElement t1 = m.saito_reflect(0, f2);
  // T_1(f_2 top) = f*_1 f_2 top, the eps_1 = 0 element at alpha1+alpha2
  CHECK(t1 == m.apply_f_star(0, f2));
  CHECK(m.weight_beta(t1) == Weight{1, 1});
  CHECK(m.eps(0, t1) == 0);
  // inverse round trip
  CHECK(m.saito_reflect_inv(0, t1) == f2);

  // precondition violations
  CrystalElement f1 = m.apply_f(0, top);
  CHECK_THROWS_AS(m.saito_reflect(0, f1), Error);         // eps*_1 = 1
  CHECK_THROWS_AS(m.saito_reflect_inv(0, f1), Error);     // eps_1 = 1

  // sl2: the domain above height zero is empty
  CrystalModel s(q_sl2());
  CrystalElement b = s.apply_f(0, s.highest());
  CHECK_THROWS_AS(s.saito_reflect(0, b), Error);
}

TEST_CASE("tcorr bijection at small heights") {
  for (const Quiver& q : {q_a2(), q_kronecker(), q_a3()}) {
    CrystalModel m(q);
    int cap = 4;
    CrystalTable table(m, cap);
    for (int i = 0; i < q.size(); ++i)
      for (int h = 0; h <= cap; ++h)
        for (const Weight& w : table.weights_of_height(h)) {
          Weight sw = weyl_reflect(q, i, w);
          if (!in_q_plus(sw) || height(sw) > cap) continue;
          // domain: eps*_i = 0 at w; image: eps_i = 0 at s_i w
          std::vector<CrystalElement> image;
          for (const CrystalElement& b : table.at(w)) {
            if (m.eps_star(i, b) != 0) continue;
            image.push_back(m.saito_reflect(i, b));
          }
          int targets = 0;
          for (const CrystalElement& b : table.at(sw))
            if (m.eps(i, b) == 0) ++targets;
          CHECK(static_cast<int>(image.size()) == targets);
          std::sort(image.begin(), image.end());
          CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
        }
  }
}

TEST_CASE("braid relations on the valid domains") {
  auto chain = [](CrystalModel& m, const CrystalElement& b,
                  std::vector<int> is) -> std::optional<CrystalElement> {
    CrystalElement x = b;
    for (int i : is) {
      if (m.eps_star(i, x) != 0) return std::nullopt;
      Weight sw = weyl_reflect(m.quiver(), i, m.weight_beta(x));
      if (!in_q_plus(sw)) return std::nullopt;
      x = m.saito_reflect(i, x);
    }
    return x;
  };
  // single edge: T_i T_j T_i = T_j T_i T_j
  {
    CrystalModel m(q_a2());
    CrystalTable table(m, 5);
    for (int h = 0; h <= 5; ++h)
      for (const Weight& w : table.weights_of_height(h))
        for (const CrystalElement& b : table.at(w)) {
          auto lhs = chain(m, b, {0, 1, 0});
          auto rhs = chain(m, b, {1, 0, 1});
          if (lhs && rhs) CHECK(*lhs == *rhs);
        }
  }
  // no edge: T_i T_j = T_j T_i
  {
    CrystalModel m(q_a1a1());
    CrystalTable table(m, 5);
    for (int h = 0; h <= 5; ++h)
      for (const Weight& w : table.weights_of_height(h))
        for (const CrystalElement& b : table.at(w)) {
          auto lhs = chain(m, b, {0, 1});
          auto rhs = chain(m, b, {1, 0});
          if (lhs && rhs) CHECK(*lhs == *rhs);
        }
  }
}
