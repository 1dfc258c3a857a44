#include "seaweed/seaweed.hpp"

#include "seaweed/prng.hpp"

#include <algorithm>
#include <stdexcept>

namespace seaweed {

namespace {

constexpr long kCoordBound = 1L << 20;

std::vector<int> signed_coeffs(const RootSystem& rs, RootRef r) {
  std::vector<int> c = rs.positive_roots()[ref_index(r)].coeffs;
  if (r < 0)
    for (int& v : c) v = -v;
  return c;
}

} // namespace

Seaweed build_seaweed(const RootSystem& rs, Subset s, Subset t) {
  Seaweed q;
  q.rs = rs;
  q.s = s;
  q.t = t;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (rs.support(k).is_subset_of(s)) q.support.push_back(k + 1);
  for (int k = 0; k < rs.num_positive(); ++k)
    if (rs.support(k).is_subset_of(t)) q.support.push_back(-(k + 1));
  q.dim = rs.rank() + static_cast<int>(q.support.size());
  for (std::size_t i = 0; i < q.support.size(); ++i)
    q.positions.emplace(q.support[i], rs.rank() + static_cast<int>(i));

  // Support closure: a bracket of support root vectors stays in the support.
  for (RootRef a : q.support) {
    const auto ca = signed_coeffs(rs, a);
    for (RootRef b : q.support) {
      if (a == -b) continue;
      std::vector<int> sum = ca;
      const auto cb = signed_coeffs(rs, b);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += cb[i];
      if (!rs.is_root(sum)) continue;
      bool positive = std::all_of(sum.begin(), sum.end(), [](int v) { return v >= 0; });
      const int idx = [&] {
        if (positive) return rs.positive_index(sum);
        for (int& v : sum) v = -v;
        return rs.positive_index(sum);
      }();
      if (q.position_of(positive ? idx + 1 : -(idx + 1)) < 0)
        throw std::logic_error("seaweed support is not closed");
    }
  }
  return q;
}

IntMatrix phi_matrix(const Seaweed& q, const StructureConstants& sc, const LinearForm& f) {
  if (f.coords.size() != q.dim) throw std::invalid_argument("phi_matrix: form length != dim");
  const RootSystem& rs = q.rs;
  IntMatrix m = IntMatrix::Zero(q.dim, q.dim);

  for (int i = 0; i < q.dim; ++i) {
    for (int j = i + 1; j < q.dim; ++j) {
      const RootRef ri = q.root_at(i), rj = q.root_at(j);
      long v = 0;
      if (ri == 0 && rj == 0) {
        v = 0; // [h, h] = 0
      } else if (ri == 0) {
        long pair = 0; // <rj, alpha_i^vee>
        const auto c = signed_coeffs(rs, rj);
        for (int k = 0; k < rs.rank(); ++k) pair += c[k] * rs.cartan()(k, i);
        v = pair * f.coords(j);
      } else if (ri == -rj) {
        const IntVector& h = sc.coroot(ref_index(ri));
        const long sign = ri > 0 ? 1 : -1;
        for (int k = 0; k < rs.rank(); ++k) v += sign * h(k) * f.coords(k);
      } else {
        auto sum = signed_coeffs(rs, ri);
        const auto cj = signed_coeffs(rs, rj);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += cj[k];
        if (rs.is_root(sum)) {
          bool positive = std::all_of(sum.begin(), sum.end(), [](int x) { return x >= 0; });
          if (!positive)
            for (int& x : sum) x = -x;
          const RootRef rsum = (positive ? 1 : -1) * (rs.positive_index(sum) + 1);
          const int pos = q.position_of(rsum);
          if (pos < 0) throw std::logic_error("phi_matrix: bracket left the support");
          v = sc.n(ri, rj) * f.coords(pos);
        }
      }
      m(i, j) = v;
      m(j, i) = -v;
    }
  }
  return m;
}

long generic_index(const Seaweed& q, const StructureConstants& sc, int trials,
                   std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("generic_index: trials must be >= 1");
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 g(mix_seed(seed, static_cast<std::uint64_t>(t)));
    LinearForm f;
    f.coords = IntVector(q.dim);
    for (int i = 0; i < q.dim; ++i) f.coords(i) = g.symmetric(kCoordBound);
    best = std::max(best, bareiss_rank(phi_matrix(q, sc, f)));
  }
  return q.dim - best;
}

long d_bound(const RootSystem& rs, Subset s, Subset t) {
  const CascadeSet ks = cascade(rs, s);
  const CascadeSet kt = cascade(rs, t);
  const CascadeSet both[] = {ks, kt};
  return rs.rank() + ks.size() + kt.size() - 2 * dim_span_epsilons(rs, both);
}

LinearForm candidate_form(const Seaweed& q, const std::vector<long>& omega) {
  const RootSystem& rs = q.rs;
  const CascadeSet ks = cascade(rs, q.s);
  const CascadeSet kt = cascade(rs, q.t);
  const int m = ks.size() + kt.size();
  if (static_cast<int>(omega.size()) != m)
    throw std::invalid_argument("candidate_form: need one coefficient per cascade member");
  for (long c : omega)
    if (c == 0) throw std::invalid_argument("candidate_form: zero coefficient");

  LinearForm f;
  f.coords = IntVector::Zero(q.dim);
  for (int k = 0; k < ks.size(); ++k)
    f.coords(q.position_of(ks.members[k].epsilon + 1)) = omega[k];
  for (int k = 0; k < kt.size(); ++k)
    f.coords(q.position_of(-(kt.members[k].epsilon + 1))) = omega[ks.size() + k];
  return f;
}

WitnessData witness_quantities(const Seaweed& q) {
  const RootSystem& rs = q.rs;
  const CascadeSet ks = cascade(rs, q.s);
  const CascadeSet kt = cascade(rs, q.t);

  WitnessData w;
  w.m = ks.size() + kt.size();
  const CascadeSet both[] = {ks, kt};
  w.s = dim_span_epsilons(rs, both);

  auto complement_in_layer = [&](const CascadeMember& mem, int alpha_idx) {
    // index of eps - alpha, which lies in Gamma0 with alpha
    std::vector<int> c = rs.positive_roots()[mem.epsilon].coeffs;
    const auto& a = rs.positive_roots()[alpha_idx].coeffs;
    for (int i = 0; i < rs.rank(); ++i) c[i] -= a[i];
    return rs.positive_index(c);
  };

  for (const auto& mem : ks.members)
    for (int a : mem.gamma0) {
      const int b = complement_in_layer(mem, a);
      if (a < b) w.h1.emplace_back(a + 1, b + 1);
    }
  for (const auto& mem : kt.members)
    for (int a : mem.gamma0) {
      const int b = complement_in_layer(mem, a);
      if (a < b) w.h2.emplace_back(-(a + 1), -(b + 1));
    }
  w.r = static_cast<long>(w.h1.size() + w.h2.size());

  long n_sum = 0;
  for (const auto& mem : ks.members) n_sum += mem.n_pairs;
  for (const auto& mem : kt.members) n_sum += mem.n_pairs;
  if (w.r != n_sum) throw std::logic_error("witness pair count mismatch");

  auto eps_index_of = [&](const CascadeSet& cs, const std::vector<int>& coeffs) {
    const int idx = rs.positive_index(coeffs);
    if (idx < 0) return false;
    return std::any_of(cs.members.begin(), cs.members.end(),
                       [&](const CascadeMember& m) { return m.epsilon == idx; });
  };

  for (const auto& k : ks.members) {
    const auto& eps_k = rs.positive_roots()[k.epsilon].coeffs;
    for (const auto& l : kt.members) {
      const auto& eps_l = rs.positive_roots()[l.epsilon].coeffs;

      // I1: (-beta, eps_K) with beta in Gamma0^L and eps_K - beta = -eps_{L'}
      for (int b : l.gamma0) {
        std::vector<int> v = eps_k;
        const auto& bc = rs.positive_roots()[b].coeffs;
        for (int i = 0; i < rs.rank(); ++i) v[i] = -(v[i] - bc[i]);
        if (eps_index_of(kt, v)) w.i1.emplace_back(-(b + 1), k.epsilon + 1);
      }
      // I2: (alpha, -eps_L) with alpha in Gamma0^K and alpha - eps_L = eps_{K'}
      for (int a : k.gamma0) {
        std::vector<int> v = rs.positive_roots()[a].coeffs;
        for (int i = 0; i < rs.rank(); ++i) v[i] -= eps_l[i];
        if (eps_index_of(ks, v)) w.i2.emplace_back(a + 1, -(l.epsilon + 1));
      }
      // J: (alpha, -beta) with alpha - beta = eps_{K'} or -eps_{L'}
      for (int a : k.gamma0) {
        const auto& ac = rs.positive_roots()[a].coeffs;
        for (int b : l.gamma0) {
          const auto& bc = rs.positive_roots()[b].coeffs;
          std::vector<int> v(rs.rank()), nv(rs.rank());
          for (int i = 0; i < rs.rank(); ++i) {
            v[i] = ac[i] - bc[i];
            nv[i] = -v[i];
          }
          if (eps_index_of(ks, v) || eps_index_of(kt, nv)) w.j.emplace_back(a + 1, -(b + 1));
        }
      }
    }
  }
  return w;
}

bool check_rank_bound(const Seaweed& q, const StructureConstants& sc,
                      const std::vector<long>& omega, std::uint64_t seed) {
  const WitnessData w = witness_quantities(q);
  const long need = 2 * (w.r + w.s);
  auto passes = [&](const std::vector<long>& om) {
    return bareiss_rank(phi_matrix(q, sc, candidate_form(q, om))) >= need;
  };
  auto draw = [&](std::uint64_t s0) {
    SplitMix64 g(s0);
    std::vector<long> om(w.m);
    for (long& c : om) c = g.symmetric_nonzero(kCoordBound);
    return om;
  };
  const std::vector<long> first = omega.empty() ? draw(seed) : omega;
  if (passes(first)) return true;
  return passes(draw(mix_seed(seed, 0x5245545259ULL)));
}

std::vector<RatVector> kernel_basis(const Seaweed& q, const StructureConstants& sc,
                                    const LinearForm& f) {
  return rational_kernel_basis(phi_matrix(q, sc, f));
}

Subset parabolic_of_index(const RootSystem& rs, int i) {
  const int l = rs.rank();
  if (i < 0 || i > l) throw std::invalid_argument("parabolic_of_index: index out of range");
  const int n = kg(rs);
  if (i >= l - n) {
    const auto chain = cascade_chain(rs, Subset::full(l)); // chain[j-1] = S_j
    const int j = i - (l - n);
    return j == 0 ? Subset() : chain[j - 1];
  }
  switch (rs.type().letter) {
    case 'A': {
      const int lp = l - n; // l - [(l+1)/2]
      Subset t;
      for (int k = 1; k <= lp - i; ++k) t.add(k % 2 == 1 ? k : l + 1 - k);
      return t;
    }
    case 'D': // l odd here; only i = 0 falls below the chain
      return Subset().add(l - 1);
    case 'E': // only E6 has n < l; i = 1 and i = 0
      return i == 1 ? Subset().add(1) : Subset().add(1).add(5);
    default:
      throw std::logic_error("parabolic_of_index: unexpected type below chain range");
  }
}

VerifyResult verify_pair(const RootSystem& rs, const StructureConstants& sc, Subset s,
                         Subset t, std::uint64_t seed, int trials) {
  VerifyResult r;
  const Seaweed q = build_seaweed(rs, s, t);
  r.chi = generic_index(q, sc, trials, seed);
  r.d = d_bound(rs, s, t);
  r.bound_ok = r.chi <= r.d;
  r.equality = r.chi == r.d;
  return r;
}

} // namespace seaweed
