#include "seaweed/rootsys.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace seaweed;

namespace {

std::vector<SimpleType> types_up_to_rank(int max_rank) {
  std::vector<SimpleType> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back(simple_type('A', l));
  for (int l = 2; l <= max_rank; ++l) out.push_back(simple_type('B', l));
  for (int l = 3; l <= max_rank; ++l) out.push_back(simple_type('C', l));
  for (int l = 4; l <= max_rank; ++l) out.push_back(simple_type('D', l));
  if (max_rank >= 6) out.push_back(simple_type('E', 6));
  if (max_rank >= 7) out.push_back(simple_type('E', 7));
  if (max_rank >= 8) out.push_back(simple_type('E', 8));
  if (max_rank >= 4) out.push_back(simple_type('F', 4));
  out.push_back(simple_type('G', 2));
  return out;
}

std::vector<Subset> connected_subsets(const RootSystem& rs) {
  std::vector<Subset> out;
  for (std::uint32_t b = 1; b < (1u << rs.rank()); ++b) {
    Subset s(b);
    if (connected_components(rs, s).size() == 1) out.push_back(s);
  }
  return out;
}

} // namespace

TEST_CASE("simple type validation") {
  CHECK_THROWS_AS(simple_type('A', 0), std::invalid_argument);
  CHECK_THROWS_AS(simple_type('B', 1), std::invalid_argument);
  CHECK_THROWS_AS(simple_type('C', 2), std::invalid_argument);
  CHECK_THROWS_AS(simple_type('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(simple_type('E', 5), std::invalid_argument);
  CHECK_THROWS_AS(simple_type('E', 9), std::invalid_argument);
  CHECK_THROWS_AS(simple_type('F', 3), std::invalid_argument);
  CHECK_THROWS_AS(simple_type('G', 3), std::invalid_argument);
  CHECK_THROWS_AS(simple_type('H', 2), std::invalid_argument);
  CHECK(simple_type('B', 2).rank == 2);
}

TEST_CASE("subset parsing and formatting") {
  CHECK(parse_subset("none", 4).empty());
  CHECK(parse_subset("", 4).empty());
  CHECK(parse_subset("1,3,4", 4).bits() == 0b1101u);
  CHECK(format_subset(Subset(0b1101u)) == "1,3,4");
  CHECK(format_subset(Subset()) == "none");
  CHECK_THROWS_AS(parse_subset("0", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset("5", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset("1,x", 4), std::invalid_argument);
}

TEST_CASE("positive root lists for the smallest systems") {
  // frozen from the standard tables, not recomputed
  auto coeff_set = [](const RootSystem& rs) {
    std::set<std::vector<int>> out;
    for (const auto& r : rs.positive_roots()) out.insert(r.coeffs);
    return out;
  };

  const auto a2 = build_root_system(simple_type('A', 2));
  CHECK(coeff_set(a2) == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});

  const auto b2 = build_root_system(simple_type('B', 2));
  CHECK(coeff_set(b2) == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});

  const auto g2 = build_root_system(simple_type('G', 2));
  CHECK(coeff_set(g2) ==
        std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
  CHECK(highest_root(g2, Subset::full(2)).coeffs == std::vector<int>{3, 2});
}

TEST_CASE("positive root counts match the classical values") {
  auto count = [](const SimpleType& t) {
    const int l = t.rank;
    switch (t.letter) {
      case 'A': return l * (l + 1) / 2;
      case 'B':
      case 'C': return l * l;
      case 'D': return l * (l - 1);
      case 'E': return l == 6 ? 36 : (l == 7 ? 63 : 120);
      case 'F': return 24;
      default: return 6; // G2
    }
  };
  for (const auto& t : types_up_to_rank(8)) {
    const auto rs = build_root_system(t);
    CHECK(rs.num_positive() == count(t));
  }
}

TEST_CASE("positive roots follow the fixed height-lex order") {
  for (const auto& t : types_up_to_rank(6)) {
    const auto rs = build_root_system(t);
    const auto& roots = rs.positive_roots();
    for (std::size_t k = 1; k < roots.size(); ++k) {
      const bool ordered =
          roots[k - 1].height < roots[k].height ||
          (roots[k - 1].height == roots[k].height && roots[k - 1].coeffs < roots[k].coeffs);
      CHECK(ordered);
    }
  }
}

TEST_CASE("highest roots of the full systems match the classical tables") {
  // frozen from the standard tables (coefficients over the simple roots)
  auto theta = [](const SimpleType& t) -> std::vector<int> {
    const int l = t.rank;
    std::vector<int> c(l, 2);
    switch (t.letter) {
      case 'A': return std::vector<int>(l, 1);
      case 'B': c[0] = 1; return c;
      case 'C': c[l - 1] = 1; return c;
      case 'D': c[0] = c[l - 2] = c[l - 1] = 1; return c;
      case 'E':
        if (l == 6) return {1, 2, 2, 3, 2, 1};
        if (l == 7) return {2, 2, 3, 4, 3, 2, 1};
        return {2, 3, 4, 6, 5, 4, 3, 2};
      case 'F': return {2, 3, 4, 2};
      default: return {3, 2}; // G2
    }
  };
  for (const auto& t : types_up_to_rank(8)) {
    const auto rs = build_root_system(t);
    CHECK(highest_root(rs, Subset::full(t.rank)).coeffs == theta(t));
  }
}

TEST_CASE("pairing values") {
  const auto a2 = build_root_system(simple_type('A', 2));
  const Root a1{{1, 0}, 1}, a2r{{0, 1}, 1};
  CHECK(pairing(a2, a1, a1) == 2);
  CHECK(pairing(a2, a1, a2r) == -1);

  const auto a3 = build_root_system(simple_type('A', 3));
  const Root mid{{0, 1, 0}, 1}, theta{{1, 1, 1}, 3};
  CHECK(pairing(a3, mid, theta) == 0);

  const Root not_root{{2, 0, 0}, 2};
  CHECK_THROWS_AS(pairing(a3, mid, not_root), std::invalid_argument);
}

TEST_CASE("highest roots") {
  const auto a2 = build_root_system(simple_type('A', 2));
  CHECK(highest_root(a2, Subset::full(2)).coeffs == std::vector<int>{1, 1});

  const auto b2 = build_root_system(simple_type('B', 2));
  CHECK(highest_root(b2, Subset::full(2)).coeffs == std::vector<int>{1, 2});

  const auto a3 = build_root_system(simple_type('A', 3));
  CHECK(highest_root(a3, Subset().add(2)).coeffs == std::vector<int>{0, 1, 0});
  CHECK_THROWS_AS(highest_root(a3, Subset()), std::invalid_argument);
  CHECK_THROWS_AS(highest_root(a3, Subset().add(1).add(3)), std::invalid_argument);
}

TEST_CASE("connected components") {
  const auto a3 = build_root_system(simple_type('A', 3));
  CHECK(connected_components(a3, Subset()).empty());
  const auto two = connected_components(a3, Subset().add(1).add(3));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Subset().add(1));
  CHECK(two[1] == Subset().add(3));

  const auto a4 = build_root_system(simple_type('A', 4));
  const auto comps = connected_components(a4, Subset().add(1).add(2).add(4));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == Subset().add(1).add(2));
  CHECK(comps[1] == Subset().add(4));
}

TEST_CASE("strong orthogonality") {
  const auto a3 = build_root_system(simple_type('A', 3));
  const Root theta{{1, 1, 1}, 3}, mid{{0, 1, 0}, 1};
  CHECK(strongly_orthogonal(a3, theta, mid));

  const auto a2 = build_root_system(simple_type('A', 2));
  const Root a1{{1, 0}, 1}, a2r{{0, 1}, 1};
  CHECK_FALSE(strongly_orthogonal(a2, a1, a2r)); // a1 + a2 is a root
  CHECK_FALSE(strongly_orthogonal(a2, a1, a1));  // a = b
  const Root neg{{-1, 0}, -1};
  CHECK_FALSE(strongly_orthogonal(a2, a1, neg)); // a = -b
}

TEST_CASE("closure is symmetric") {
  const auto b3 = build_root_system(simple_type('B', 3));
  const auto& roots = b3.positive_roots();
  for (const auto& a : roots)
    for (const auto& b : roots) {
      std::vector<int> ab(3), ba(3);
      for (int i = 0; i < 3; ++i) {
        ab[i] = a.coeffs[i] + b.coeffs[i];
        ba[i] = b.coeffs[i] + a.coeffs[i];
      }
      CHECK(b3.is_root(ab) == b3.is_root(ba));
    }
}

TEST_CASE("highest-root pairing lands in {0,1} for every connected subset, rank <= 6") {
  for (const auto& t : types_up_to_rank(6)) {
    const auto rs = build_root_system(t);
    for (Subset s : connected_subsets(rs)) {
      const Root eps = highest_root(rs, s); // post-check inside already throws on violation
      // consequence: roots of R0^S are strongly orthogonal to eps_S
      for (int k = 0; k < rs.num_positive(); ++k) {
        if (!rs.support(k).is_subset_of(s)) continue;
        const Root& alpha = rs.positive_roots()[k];
        if (alpha == eps) continue;
        const long v = pairing(rs, alpha, eps);
        CHECK((v == 0 || v == 1));
        if (v == 0) CHECK(strongly_orthogonal(rs, alpha, eps));
      }
    }
  }
}
