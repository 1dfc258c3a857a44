#include "seaweed/seaweed.hpp"

#include "oracle_rank.hpp"
#include "seaweed/prng.hpp"

#include <doctest.h>

#include <set>

using namespace seaweed;

namespace {

struct Fixture {
  RootSystem rs;
  StructureConstants sc;
  explicit Fixture(SimpleType t) : rs(build_root_system(t)), sc(StructureConstants::build(rs)) {}
};

} // namespace

TEST_CASE("seaweed dimensions") {
  Fixture a1(simple_type('A', 1));
  CHECK(build_seaweed(a1.rs, Subset::full(1), Subset::full(1)).dim == 3);
  CHECK(build_seaweed(a1.rs, Subset::full(1), Subset()).dim == 2);

  Fixture a2(simple_type('A', 2));
  CHECK(build_seaweed(a2.rs, Subset::full(2), Subset().add(1)).dim == 6);
  CHECK(build_seaweed(a2.rs, Subset(), Subset()).dim == 2); // Cartan only
}

TEST_CASE("phi matrix of the sl2 Borel") {
  Fixture a1(simple_type('A', 1));
  const auto borel = build_seaweed(a1.rs, Subset::full(1), Subset());
  LinearForm f;
  f.coords = IntVector::Zero(2);
  f.coords(1) = 1; // dual of X_alpha
  const IntMatrix m = phi_matrix(borel, a1.sc, f);
  CHECK(m(0, 0) == 0);
  CHECK(m(0, 1) == 2);
  CHECK(m(1, 0) == -2);
  CHECK(m(1, 1) == 0);

  LinearForm zero;
  zero.coords = IntVector::Zero(2);
  CHECK(phi_matrix(borel, a1.sc, zero).isZero());

  LinearForm bad;
  bad.coords = IntVector::Zero(5);
  CHECK_THROWS_AS(phi_matrix(borel, a1.sc, bad), std::invalid_argument);
}

TEST_CASE("phi matrix of full sl2 at the Cartan dual form") {
  Fixture a1(simple_type('A', 1));
  const auto q = build_seaweed(a1.rs, Subset::full(1), Subset::full(1));
  LinearForm f;
  f.coords = IntVector::Zero(3);
  f.coords(0) = 1; // dual of H_1
  const IntMatrix m = phi_matrix(q, a1.sc, f);
  CHECK(bareiss_rank(m) == 2);
  CHECK(m(1, 2) == 1); // f([X_a, X_-a]) = f(H_a)
}

TEST_CASE("generic index on the smallest seaweeds") {
  Fixture a1(simple_type('A', 1));
  CHECK(generic_index(build_seaweed(a1.rs, Subset::full(1), Subset::full(1)), a1.sc, 3, 42) == 1);
  CHECK(generic_index(build_seaweed(a1.rs, Subset::full(1), Subset()), a1.sc, 3, 42) == 0);

  Fixture a2(simple_type('A', 2));
  CHECK(generic_index(build_seaweed(a2.rs, Subset::full(2), Subset()), a2.sc, 3, 42) == 1);
  // Cartan subalgebra: Phi_f = 0 for every f
  CHECK(generic_index(build_seaweed(a2.rs, Subset(), Subset()), a2.sc, 3, 42) == 2);

  CHECK_THROWS_AS(
      generic_index(build_seaweed(a1.rs, Subset::full(1), Subset()), a1.sc, 0, 42),
      std::invalid_argument);
}

TEST_CASE("d bound") {
  for (char letter : {'A', 'B', 'G'}) {
    const int rank = letter == 'A' ? 3 : 2;
    const auto rs = build_root_system(simple_type(letter, rank));
    CHECK(d_bound(rs, Subset::full(rank), Subset::full(rank)) == rank); // Levi
  }
  const auto a1 = build_root_system(simple_type('A', 1));
  CHECK(d_bound(a1, Subset::full(1), Subset()) == 0);
  const auto a2 = build_root_system(simple_type('A', 2));
  CHECK(d_bound(a2, Subset::full(2), Subset().add(1)) == 0);
}

TEST_CASE("candidate forms") {
  Fixture a1(simple_type('A', 1));
  const auto borel = build_seaweed(a1.rs, Subset::full(1), Subset());
  const LinearForm f1 = candidate_form(borel, {1});
  CHECK(f1.coords(0) == 0);
  CHECK(f1.coords(1) == 1);

  const auto levi = build_seaweed(a1.rs, Subset::full(1), Subset::full(1));
  const LinearForm f2 = candidate_form(levi, {1, 1});
  CHECK(f2.coords(0) == 0);
  CHECK(f2.coords(1) == 1);
  CHECK(f2.coords(2) == 1);

  Fixture a3(simple_type('A', 3));
  const auto q = build_seaweed(a3.rs, Subset::full(3), Subset());
  const LinearForm f3 = candidate_form(q, {1, 1});
  std::set<int> support;
  for (int i = 0; i < q.dim; ++i)
    if (f3.coords(i) != 0) support.insert(i);
  CHECK(support == std::set<int>{q.position_of(a3.rs.positive_index({0, 1, 0}) + 1),
                                 q.position_of(a3.rs.positive_index({1, 1, 1}) + 1)});

  CHECK_THROWS_AS(candidate_form(borel, {0}), std::invalid_argument);
  CHECK_THROWS_AS(candidate_form(borel, {1, 1}), std::invalid_argument);
}

TEST_CASE("witness quantities") {
  Fixture a1(simple_type('A', 1));
  const auto levi = build_seaweed(a1.rs, Subset::full(1), Subset::full(1));
  const auto w1 = witness_quantities(levi);
  CHECK(w1.r == 0);
  CHECK(w1.s == 1);
  CHECK(w1.m == 2);

  Fixture a2(simple_type('A', 2));
  const auto borel = build_seaweed(a2.rs, Subset::full(2), Subset());
  const auto w2 = witness_quantities(borel);
  CHECK(w2.r == 1);
  CHECK(w2.s == 1);
  REQUIRE(w2.h1.size() == 1);
  // the single Heisenberg pair sums to the highest root
  const auto& [p, q] = w2.h1.front();
  std::vector<int> sum(2);
  for (int i = 0; i < 2; ++i)
    sum[i] = a2.rs.positive_roots()[ref_index(p)].coeffs[i] +
             a2.rs.positive_roots()[ref_index(q)].coeffs[i];
  CHECK(sum == std::vector<int>{1, 1});

  const auto w3 = witness_quantities(build_seaweed(a2.rs, Subset::full(2), Subset().add(1)));
  CHECK(w3.r == 1);
  CHECK(w3.s == 2);
}

TEST_CASE("rank bound at candidate forms") {
  Fixture a1(simple_type('A', 1));
  CHECK(check_rank_bound(build_seaweed(a1.rs, Subset::full(1), Subset()), a1.sc, {1}, 42));
  CHECK(check_rank_bound(build_seaweed(a1.rs, Subset::full(1), Subset::full(1)), a1.sc, {}, 42));

  Fixture a2(simple_type('A', 2));
  CHECK(check_rank_bound(build_seaweed(a2.rs, Subset::full(2), Subset()), a2.sc, {}, 42));
}

TEST_CASE("kernel bases") {
  Fixture a1(simple_type('A', 1));
  const auto borel = build_seaweed(a1.rs, Subset::full(1), Subset());
  LinearForm f;
  f.coords = IntVector::Zero(2);
  f.coords(1) = 1;
  CHECK(kernel_basis(borel, a1.sc, f).empty());

  LinearForm zero;
  zero.coords = IntVector::Zero(2);
  CHECK(kernel_basis(borel, a1.sc, zero).size() == 2);

  const auto levi = build_seaweed(a1.rs, Subset::full(1), Subset::full(1));
  LinearForm fb;
  fb.coords = IntVector::Zero(3);
  fb.coords(1) = fb.coords(2) = 1; // X*_a + X*_{-a}
  const auto kb = kernel_basis(levi, a1.sc, fb);
  REQUIRE(kb.size() == 1);
  CHECK(kb[0](0) == 0);
  CHECK(kb[0](1) == kb[0](2)); // the forced direction X_a + X_{-a}
}

TEST_CASE("kernel dimension complements the rank at random forms") {
  Fixture c3(simple_type('C', 3));
  SplitMix64 g(808);
  for (int trial = 0; trial < 20; ++trial) {
    const Subset S(static_cast<std::uint32_t>(g.below(8)));
    const Subset T(static_cast<std::uint32_t>(g.below(8)));
    const auto q = build_seaweed(c3.rs, S, T);
    LinearForm f;
    f.coords = IntVector(q.dim);
    for (int i = 0; i < q.dim; ++i) f.coords(i) = g.symmetric(1L << 20);
    const IntMatrix m = phi_matrix(q, c3.sc, f);
    CHECK(static_cast<int>(kernel_basis(q, c3.sc, f).size()) == q.dim - bareiss_rank(m));
  }
}

TEST_CASE("kernel contains the toral part at a candidate form") {
  // Containment check: h orthogonal to E_{S,T} and the eps pairs of
  // K(S) n K(T) annihilate Phi_f at any candidate form.
  Fixture a3(simple_type('A', 3));
  for (auto [sb, tb] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {0b111, 0b111}, {0b111, 0b010}, {0b011, 0b110}, {0b101, 0b111}}) {
    const Subset S(sb), T(tb);
    const auto q = build_seaweed(a3.rs, S, T);
    const auto ks = cascade(a3.rs, S), kt = cascade(a3.rs, T);
    const int m = ks.size() + kt.size();
    std::vector<long> omega(m);
    for (int i = 0; i < m; ++i) omega[i] = 2 + i;
    const LinearForm f = candidate_form(q, omega);
    const IntMatrix phi = phi_matrix(q, a3.sc, f);

    auto in_kernel = [&](const std::vector<mpq_class>& v) {
      for (int r = 0; r < q.dim; ++r) {
        mpq_class dot = 0;
        for (int c = 0; c < q.dim; ++c) dot += phi(r, c) * v[c];
        if (dot != 0) return false;
      }
      return true;
    };

    // (a) H with eps_K(H) = 0 for all members
    IntMatrix eps_rows(m, a3.rs.rank());
    int row = 0;
    for (const auto* cs : {&ks, &kt})
      for (const auto& mem : cs->members) {
        for (int i = 0; i < a3.rs.rank(); ++i) {
          std::vector<int> alpha(a3.rs.rank(), 0);
          alpha[i] = 1;
          eps_rows(row, i) =
              a3.rs.pairing_with_coroot(a3.rs.positive_roots()[mem.epsilon].coeffs, alpha);
        }
        ++row;
      }
    for (const auto& w : rational_kernel_basis(eps_rows)) {
      std::vector<mpq_class> v(q.dim, 0);
      for (int i = 0; i < a3.rs.rank(); ++i) v[i] = w(i);
      CHECK(in_kernel(v));
    }

    // (b) b_K X_eps + a_K X_{-eps} for K in both cascades: the coefficients
    // cross so that the bracket against the defining element cancels
    for (int i = 0; i < ks.size(); ++i)
      for (int j = 0; j < kt.size(); ++j) {
        if (ks.members[i].subset != kt.members[j].subset) continue;
        std::vector<mpq_class> v(q.dim, 0);
        v[q.position_of(ks.members[i].epsilon + 1)] = omega[ks.size() + j];
        v[q.position_of(-(kt.members[j].epsilon + 1))] = omega[i];
        CHECK(in_kernel(v));
      }
  }
}

TEST_CASE("parabolic of prescribed index, frozen examples") {
  const auto a3 = build_root_system(simple_type('A', 3));
  CHECK(parabolic_of_index(a3, 0) == Subset().add(1));
  const auto b2 = build_root_system(simple_type('B', 2));
  CHECK(parabolic_of_index(b2, 2) == Subset::full(2));
  const auto g2 = build_root_system(simple_type('G', 2));
  CHECK(parabolic_of_index(g2, 1) == Subset().add(1));
  CHECK_THROWS_AS(parabolic_of_index(a3, -1), std::invalid_argument);
  CHECK_THROWS_AS(parabolic_of_index(a3, 4), std::invalid_argument);
}

TEST_CASE("parabolic of prescribed index is verified by the rank engine, rank <= 4") {
  for (const auto& t : {simple_type('A', 4), simple_type('B', 4), simple_type('C', 4),
                        simple_type('D', 4), simple_type('F', 4), simple_type('G', 2)}) {
    Fixture fx(t);
    for (int i = 0; i <= t.rank; ++i) {
      const Subset T = parabolic_of_index(fx.rs, i);
      CHECK(generic_index(build_seaweed(fx.rs, Subset::full(t.rank), T), fx.sc, 3, 17 + i) == i);
    }
  }
}

TEST_CASE("verify_pair frozen examples") {
  Fixture a1(simple_type('A', 1));
  auto r1 = verify_pair(a1.rs, a1.sc, Subset::full(1), Subset::full(1), 42);
  CHECK(r1.chi == 1);
  CHECK(r1.d == 1);
  CHECK(r1.bound_ok);
  CHECK(r1.equality);

  Fixture a2(simple_type('A', 2));
  auto r2 = verify_pair(a2.rs, a2.sc, Subset::full(2), Subset().add(1), 42);
  CHECK(r2.chi == 0);
  CHECK(r2.d == 0);
  CHECK(r2.bound_ok);
  CHECK(r2.equality);

  Fixture b2(simple_type('B', 2));
  auto r3 = verify_pair(b2.rs, b2.sc, Subset::full(2), Subset(), 42);
  CHECK(r3.chi == 0);
  CHECK(r3.d == 0);
  CHECK(r3.bound_ok);
  CHECK(r3.equality);
}

TEST_CASE("bound, equality, parity and dimension accounting over the B3 enumeration") {
  Fixture b3(simple_type('B', 3));
  const auto flipped = StructureConstants::build(b3.rs, SignConvention::flipped);
  for (std::uint32_t sb = 0; sb < 8; ++sb)
    for (std::uint32_t tb = 0; tb < 8; ++tb) {
      const Subset S(sb), T(tb);
      const auto q = build_seaweed(b3.rs, S, T);
      const auto res = verify_pair(b3.rs, b3.sc, S, T, mix_seed(3, (sb << 8) | tb));
      CHECK(res.bound_ok);
      CHECK(res.equality);
      CHECK((res.chi == 3) == (S == T)); // Levi characterization
      CHECK((q.dim - res.chi) % 2 == 0);

      const auto w = witness_quantities(q);
      CHECK(q.dim == 3 + w.m + 2 * w.r);
      CHECK(q.dim - res.d == 2 * (w.r + w.s));

      // index is independent of the Chevalley sign convention
      CHECK(generic_index(q, flipped, 3, mix_seed(3, (sb << 8) | tb)) == res.chi);

      // nested or free cascades force d = rg - dim E_{S,T} + card(K(S) n K(T))
      // and equality of chi with d
      const auto ks = cascade(b3.rs, S), kt = cascade(b3.rs, T);
      std::set<std::uint32_t> ms, mt;
      for (const auto& m : ks.members) ms.insert(m.subset.bits());
      for (const auto& m : kt.members) mt.insert(m.subset.bits());
      std::set<std::uint32_t> inter;
      for (auto v : ms)
        if (mt.count(v)) inter.insert(v);
      const bool nested = std::includes(ms.begin(), ms.end(), mt.begin(), mt.end()) ||
                          std::includes(mt.begin(), mt.end(), ms.begin(), ms.end());
      const bool free_family = w.s == ks.size() + kt.size();
      if (nested || free_family) {
        CHECK(res.d == 3 - w.s + static_cast<long>(inter.size()));
        CHECK(res.chi == res.d);
      }
      // singleton S or T forces equality (already asserted globally)
      if (S.count() == 1 || T.count() == 1) CHECK(res.chi == res.d);
    }
}

TEST_CASE("full-span cascades force index zero over the B3 enumeration") {
  Fixture b3(simple_type('B', 3));
  for (std::uint32_t sb = 0; sb < 8; ++sb)
    for (std::uint32_t tb = 0; tb < 8; ++tb) {
      const Subset S(sb), T(tb);
      const auto q = build_seaweed(b3.rs, S, T);
      const auto w = witness_quantities(q);
      if (w.m == 3 && w.s == 3) // the eps family is a basis of h*
        CHECK(generic_index(q, b3.sc, 3, mix_seed(12, (sb << 8) | tb)) == 0);
    }
}

TEST_CASE("bound and equality hold on sampled pairs at ranks 5 and 6") {
  for (const auto& t : {simple_type('D', 5), simple_type('C', 5), simple_type('A', 6),
                        simple_type('E', 6)}) {
    Fixture fx(t);
    SplitMix64 g(2024);
    for (int trial = 0; trial < 12; ++trial) {
      const Subset S(static_cast<std::uint32_t>(g.below(1u << t.rank)));
      const Subset T(static_cast<std::uint32_t>(g.below(1u << t.rank)));
      const auto res = verify_pair(fx.rs, fx.sc, S, T, mix_seed(13, g.next()));
      INFO(to_string(t) << " S=" << format_subset(S) << " T=" << format_subset(T));
      CHECK(res.bound_ok);
      CHECK(res.equality);
    }
  }
}

TEST_CASE("Bareiss rank of phi matrices matches the rational oracle") {
  Fixture b3(simple_type('B', 3));
  SplitMix64 g(5150);
  for (std::uint32_t sb = 0; sb < 8; ++sb)
    for (std::uint32_t tb = 0; tb < 8; ++tb) {
      const auto q = build_seaweed(b3.rs, Subset(sb), Subset(tb));
      if (q.dim > 20) continue;
      LinearForm f;
      f.coords = IntVector(q.dim);
      for (int i = 0; i < q.dim; ++i) f.coords(i) = g.symmetric(1L << 20);
      const IntMatrix m = phi_matrix(q, b3.sc, f);
      CHECK(bareiss_rank(m) == oracle_rational_rank(m));
    }
}

TEST_CASE("Heisenberg layers bracket into the epsilon line inside the seaweed") {
  Fixture b3(simple_type('B', 3));
  const Subset S = Subset::full(3);
  const auto q = build_seaweed(b3.rs, S, Subset());
  for (const auto& mem : cascade(b3.rs, S).members) {
    for (int a : mem.gamma0)
      for (int b : mem.gamma0) {
        if (a == b) continue;
        const RootRef sum = [&] {
          std::vector<int> v = b3.rs.positive_roots()[a].coeffs;
          for (int i = 0; i < 3; ++i) v[i] += b3.rs.positive_roots()[b].coeffs[i];
          const int idx = b3.rs.positive_index(v);
          return idx < 0 ? 0 : idx + 1;
        }();
        if (sum == 0) {
          CHECK(b3.sc.n(a + 1, b + 1) == 0);
        } else {
          CHECK(ref_index(sum) == mem.epsilon);
          CHECK(b3.sc.n(a + 1, b + 1) != 0);
        }
      }
  }
}
