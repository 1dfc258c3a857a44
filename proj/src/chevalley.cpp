#include "seaweed/chevalley.hpp"

#include "seaweed/prng.hpp"

#include <stdexcept>

namespace seaweed {

namespace {

std::vector<int> ref_coeffs(const RootSystem& rs, RootRef r) {
  std::vector<int> c = rs.positive_roots()[ref_index(r)].coeffs;
  if (r < 0)
    for (int& v : c) v = -v;
  return c;
}

RootRef ref_of(const RootSystem& rs, const std::vector<int>& coeffs) {
  bool any_pos = false, any_neg = false;
  for (int v : coeffs) {
    any_pos |= v > 0;
    any_neg |= v < 0;
  }
  if (any_pos == any_neg) return 0; // zero or mixed signs
  if (any_pos) {
    int idx = rs.positive_index(coeffs);
    return idx < 0 ? 0 : idx + 1;
  }
  std::vector<int> neg(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  int idx = rs.positive_index(neg);
  return idx < 0 ? 0 : -(idx + 1);
}

RootRef ref_sum(const RootSystem& rs, RootRef a, RootRef b) {
  auto ca = ref_coeffs(rs, a);
  const auto cb = ref_coeffs(rs, b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
  return ref_of(rs, ca);
}

} // namespace

long StructureConstants::pos_entry(int i, int j) const {
  long v = pos_n_[static_cast<std::size_t>(i) * rs_.num_positive() + j];
  if (v == 0) throw std::logic_error("structure constant read before computation");
  return v;
}

int StructureConstants::string_down(RootRef a, RootRef b) const {
  const auto ca = ref_coeffs(rs_, a);
  auto c = ref_coeffs(rs_, b);
  int p = 0;
  for (;;) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= ca[i];
    if (!rs_.is_root(c)) break;
    ++p;
  }
  return p;
}

// N_{x,-y} for distinct positive roots x, y with x - y a root; reduces to a
// positive pair through the triple (x, -y, -(x-y)) resp. (x, -y, y-x).
long StructureConstants::mixed(int xi, int eta) const {
  const auto& roots = rs_.positive_roots();
  std::vector<int> diff = roots[xi].coeffs;
  for (int j = 0; j < rs_.rank(); ++j) diff[j] -= roots[eta].coeffs[j];
  RootRef dref = ref_of(rs_, diff);
  if (dref == 0) return 0;
  if (dref > 0) {
    const int d = ref_index(dref);
    const long num = -static_cast<long>(rs_.half_length(d)) * pos_entry(eta, d);
    if (num % rs_.half_length(xi) != 0) throw std::logic_error("non-integral mixed constant");
    return num / rs_.half_length(xi);
  }
  const int d = ref_index(dref);
  const long num = -static_cast<long>(rs_.half_length(d)) * pos_entry(xi, d);
  if (num % rs_.half_length(eta) != 0) throw std::logic_error("non-integral mixed constant");
  return num / rs_.half_length(eta);
}

long StructureConstants::n(RootRef a, RootRef b) const {
  if (a == 0 || b == 0 || a == -b) throw std::invalid_argument("n: bad root pair");
  if (ref_sum(rs_, a, b) == 0) return 0;
  if (a > 0 && b > 0) return pos_entry(ref_index(a), ref_index(b));
  if (a < 0 && b < 0) return -pos_entry(ref_index(a), ref_index(b));
  if (a > 0) return mixed(ref_index(a), ref_index(b));
  return -mixed(ref_index(b), ref_index(a));
}

StructureConstants StructureConstants::build(const RootSystem& rs, SignConvention sign) {
  StructureConstants sc;
  sc.rs_ = rs;
  sc.sign_ = sign;
  const int npos = rs.num_positive();
  sc.pos_n_.assign(static_cast<std::size_t>(npos) * npos, 0);
  auto set = [&](int i, int j, long v) {
    sc.pos_n_[static_cast<std::size_t>(i) * npos + j] = v;
    sc.pos_n_[static_cast<std::size_t>(j) * npos + i] = -v;
  };

  const long base_sign = sign == SignConvention::standard ? 1 : -1;
  const auto& roots = rs.positive_roots();

  // Index order on positive roots is the fixed total order, so a sweep in
  // index order visits sums by nondecreasing height.
  for (int g = 0; g < npos; ++g) {
    if (roots[g].height < 2) continue;
    std::vector<std::pair<int, int>> special;
    for (int i = 0; i < g; ++i) {
      std::vector<int> rest = roots[g].coeffs;
      for (int k = 0; k < rs.rank(); ++k) rest[k] -= roots[i].coeffs[k];
      const int j = rs.positive_index(rest);
      if (j > i) special.emplace_back(i, j);
    }
    if (special.empty()) throw std::logic_error("no special pair for a non-simple root");

    const auto [i1, j1] = special.front(); // minimal first component: extraspecial
    set(i1, j1, base_sign * (sc.string_down(i1 + 1, j1 + 1) + 1));

    for (std::size_t k = 1; k < special.size(); ++k) {
      const auto [i, j] = special[k];
      // Jacobi on (-a1, a, b) with a1 + b1 = a + b = c:
      //   N_{-a1,a} N_{a-a1,b} + N_{a,b} N_{c,-a1} + N_{b,-a1} N_{b-a1,a} = 0
      const RootRef a1 = i1 + 1, a = i + 1, b = j + 1, c = g + 1;
      long t1 = 0, t3 = 0;
      if (RootRef d = ref_sum(rs, -a1, a); d != 0) t1 = sc.n(-a1, a) * sc.n(d, b);
      if (RootRef d = ref_sum(rs, b, -a1); d != 0) t3 = sc.n(b, -a1) * sc.n(d, a);
      const long div = sc.n(c, -a1);
      if (div == 0 || (t1 + t3) % div != 0) throw std::logic_error("Jacobi propagation failed");
      set(i, j, -(t1 + t3) / div);
    }
  }

  // Magnitude self-check: |N_{a,b}| = p+1 on every positive pair.
  for (int i = 0; i < npos; ++i) {
    for (int j = 0; j < npos; ++j) {
      if (i == j) continue;
      std::vector<int> sum = roots[i].coeffs;
      for (int k = 0; k < rs.rank(); ++k) sum[k] += roots[j].coeffs[k];
      const int s = rs.positive_index(sum);
      const long v = s < 0 ? 0 : sc.pos_n_[static_cast<std::size_t>(i) * npos + j];
      if (s >= 0 && std::abs(v) != sc.string_down(i + 1, j + 1) + 1)
        throw std::logic_error("structure constant magnitude check failed");
    }
  }

  // Coroots over the simple coroots: H_a = sum_i (c_i d_i / d_a) H_i.
  for (int k = 0; k < npos; ++k) {
    IntVector h(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
      const long num = static_cast<long>(roots[k].coeffs[i]) * rs.symmetric_form()(i, i) / 2;
      if (num % rs.half_length(k) != 0) throw std::logic_error("non-integral coroot");
      h(i) = num / rs.half_length(k);
    }
    sc.coroots_.push_back(std::move(h));
  }

  const bool ok = rs.rank() <= 3 ? jacobi_identity_holds(sc, 0, 0)
                                 : jacobi_identity_holds(sc, 2000, 0x5ea1ULL);
  if (!ok) throw std::logic_error("Jacobi self-check failed");
  return sc;
}

LieElement LieElement::zero(int rank) {
  LieElement e;
  e.h = IntVector::Zero(rank);
  return e;
}

bool LieElement::is_zero() const {
  for (int i = 0; i < h.size(); ++i)
    if (h(i) != 0) return false;
  for (const auto& [r, c] : x)
    if (c != 0) return false;
  return true;
}

LieElement cartan_element(const RootSystem& rs, int i) {
  LieElement e = LieElement::zero(rs.rank());
  e.h(i) = 1;
  return e;
}

LieElement root_element(const RootSystem& rs, RootRef r) {
  LieElement e = LieElement::zero(rs.rank());
  e.x[r] = 1;
  return e;
}

LieElement bracket(const StructureConstants& sc, const LieElement& a, const LieElement& b) {
  const RootSystem& rs = sc.root_system();
  LieElement out = LieElement::zero(rs.rank());

  auto h_on_x = [&](const IntVector& h, const std::map<RootRef, long>& x, long s) {
    for (const auto& [r, c] : x) {
      if (c == 0) continue;
      const auto rc = ref_coeffs(rs, r);
      for (int i = 0; i < rs.rank(); ++i) {
        if (h(i) == 0) continue;
        long pair = 0; // <r, alpha_i^vee>
        for (int j = 0; j < rs.rank(); ++j) pair += rc[j] * rs.cartan()(j, i);
        out.x[r] += s * h(i) * c * pair;
      }
    }
  };
  h_on_x(a.h, b.x, 1);
  h_on_x(b.h, a.x, -1);

  for (const auto& [ra, ca] : a.x) {
    if (ca == 0) continue;
    for (const auto& [rb, cb] : b.x) {
      if (cb == 0) continue;
      if (ra == -rb) {
        const long s = ra > 0 ? 1 : -1;
        out.h += s * ca * cb * sc.coroot(ref_index(ra));
        continue;
      }
      if (const RootRef sum = ref_sum(rs, ra, rb); sum != 0)
        out.x[sum] += ca * cb * sc.n(ra, rb);
    }
  }
  return out;
}

bool jacobi_identity_holds(const StructureConstants& sc, long samples, std::uint64_t seed) {
  const RootSystem& rs = sc.root_system();
  const int npos = rs.num_positive();
  const int dim = rs.rank() + 2 * npos;

  auto basis = [&](int label) {
    if (label < rs.rank()) return cartan_element(rs, label);
    const int k = label - rs.rank();
    return root_element(rs, (k % 2 == 0 ? 1 : -1) * (k / 2 + 1));
  };
  auto jacobi_zero = [&](int i, int j, int k) {
    const LieElement x = basis(i), y = basis(j), z = basis(k);
    LieElement sum = bracket(sc, bracket(sc, x, y), z);
    const LieElement t2 = bracket(sc, bracket(sc, y, z), x);
    const LieElement t3 = bracket(sc, bracket(sc, z, x), y);
    sum.h += t2.h + t3.h;
    for (const auto& [r, c] : t2.x) sum.x[r] += c;
    for (const auto& [r, c] : t3.x) sum.x[r] += c;
    return sum.is_zero();
  };

  if (samples == 0) {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k)
          if (!jacobi_zero(i, j, k)) return false;
    return true;
  }
  SplitMix64 g(seed);
  for (long t = 0; t < samples; ++t) {
    const int i = static_cast<int>(g.below(dim));
    const int j = static_cast<int>(g.below(dim));
    const int k = static_cast<int>(g.below(dim));
    if (!jacobi_zero(i, j, k)) return false;
  }
  return true;
}

} // namespace seaweed
