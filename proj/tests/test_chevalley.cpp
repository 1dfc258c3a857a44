#include "seaweed/chevalley.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace seaweed;

namespace {

RootRef ref_of_coeffs(const RootSystem& rs, const std::vector<int>& c) {
  const int idx = rs.positive_index(c);
  REQUIRE(idx >= 0);
  return idx + 1;
}

} // namespace

TEST_CASE("A2 constants") {
  const auto rs = build_root_system(simple_type('A', 2));
  const auto sc = StructureConstants::build(rs);
  const RootRef a1 = ref_of_coeffs(rs, {1, 0});
  const RootRef a2 = ref_of_coeffs(rs, {0, 1});
  const RootRef th = ref_of_coeffs(rs, {1, 1});

  // (a2, a1) is the extraspecial pair: (0,1) precedes (1,0) in height-lex order
  CHECK(sc.n(a2, a1) == 1);
  CHECK(sc.n(a1, a2) == -1);
  CHECK(sc.n(a1, th) == 0);   // sum not a root
  CHECK(sc.n(a1, a1) == 0);   // [X_a, X_a] = 0
  CHECK(sc.n(th, -a1) == 1);  // reduces through the triple with alpha_2
  CHECK(sc.n(-a2, -a1) == -1); // N_{-a,-b} = -N_{a,b}

  const auto flipped = StructureConstants::build(rs, SignConvention::flipped);
  CHECK(flipped.n(a2, a1) == -1);
}

TEST_CASE("G2 magnitudes") {
  const auto rs = build_root_system(simple_type('G', 2));
  const auto sc = StructureConstants::build(rs);
  const RootRef a1 = ref_of_coeffs(rs, {1, 0});
  const RootRef a1a2 = ref_of_coeffs(rs, {1, 1});
  CHECK(std::abs(sc.n(a1, a1a2)) == 2); // p = 1: (1,1) - (1,0) = alpha_2 is a root
}

TEST_CASE("antisymmetry and negation across all B3 pairs") {
  const auto rs = build_root_system(simple_type('B', 3));
  const auto sc = StructureConstants::build(rs);
  const int npos = rs.num_positive();
  for (int i = 1; i <= npos; ++i)
    for (int j = 1; j <= npos; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          const RootRef a = si * i, b = sj * j;
          if (a == -b || a == b) continue;
          CHECK(sc.n(a, b) == -sc.n(b, a));
          CHECK(sc.n(-a, -b) == -sc.n(a, b));
        }
}

TEST_CASE("coroots over the simple coroots") {
  const auto b2 = build_root_system(simple_type('B', 2));
  const auto scb = StructureConstants::build(b2);
  const int theta = b2.positive_index({1, 2});
  CHECK(scb.coroot(theta)(0) == 1);
  CHECK(scb.coroot(theta)(1) == 1);

  const auto g2 = build_root_system(simple_type('G', 2));
  const auto scg = StructureConstants::build(g2);
  const int th = g2.positive_index({3, 2});
  CHECK(scg.coroot(th)(0) == 1);
  CHECK(scg.coroot(th)(1) == 2);
  const int sh = g2.positive_index({2, 1}); // short root: coroot picks up the ratios
  CHECK(scg.coroot(sh)(0) == 2);
  CHECK(scg.coroot(sh)(1) == 3);

  const auto f4 = build_root_system(simple_type('F', 4));
  const auto scf = StructureConstants::build(f4);
  const int tf = f4.positive_index({2, 3, 4, 2});
  CHECK(scf.coroot(tf)(0) == 2); // theta is long: coroot halves the short marks
  CHECK(scf.coroot(tf)(1) == 3);
  CHECK(scf.coroot(tf)(2) == 2);
  CHECK(scf.coroot(tf)(3) == 1);
}

TEST_CASE("bracket arithmetic on elements") {
  const auto rs = build_root_system(simple_type('A', 2));
  const auto sc = StructureConstants::build(rs);
  const RootRef a1 = ref_of_coeffs(rs, {1, 0});

  // [H_1, X_{a1}] = 2 X_{a1}
  const auto h1 = cartan_element(rs, 0);
  const auto x = root_element(rs, a1);
  const auto hx = bracket(sc, h1, x);
  CHECK(hx.x.at(a1) == 2);
  CHECK(hx.h.isZero());

  // [X_{a1}, X_{-a1}] = H_{a1}
  const auto xm = root_element(rs, -a1);
  const auto hh = bracket(sc, x, xm);
  CHECK(hh.x.empty());
  CHECK(hh.h(0) == 1);
  CHECK(hh.h(1) == 0);

  // antisymmetry of the element bracket
  const auto minus = bracket(sc, xm, x);
  CHECK(minus.h(0) == -1);
}

TEST_CASE("Jacobi identity, exhaustive through rank 4 and sampled above") {
  for (const auto& t : {simple_type('A', 3), simple_type('B', 3), simple_type('C', 3),
                        simple_type('G', 2)}) {
    const auto rs = build_root_system(t);
    for (auto conv : {SignConvention::standard, SignConvention::flipped}) {
      const auto sc = StructureConstants::build(rs, conv);
      CHECK(jacobi_identity_holds(sc, 0, 0));
    }
  }
  for (const auto& t : {simple_type('A', 4), simple_type('B', 4), simple_type('C', 4),
                        simple_type('D', 4), simple_type('F', 4)}) {
    const auto sc = StructureConstants::build(build_root_system(t));
    CHECK(jacobi_identity_holds(sc, 0, 0)); // still exhaustive at this size
  }
  for (const auto& t : {simple_type('E', 6), simple_type('B', 6)}) {
    const auto sc = StructureConstants::build(build_root_system(t));
    CHECK(jacobi_identity_holds(sc, 20000, 123));
  }
}
