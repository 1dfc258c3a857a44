#ifndef SEAWEED_SEAWEED_HPP
#define SEAWEED_SEAWEED_HPP

#include "seaweed/cascade.hpp"
#include "seaweed/chevalley.hpp"
#include "seaweed/linalg.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace seaweed {

/// Standard biparabolic subalgebra g_{S,T} = h + g^{R+^S} + g^{R-^T}.
/// Basis order: the l simple coroots H_1..H_l, then X_a for a in R+^S in
/// the fixed order on R+, then X_{-b} for b in R+^T likewise.
struct Seaweed {
  RootSystem rs;
  Subset s, t;
  std::vector<RootRef> support; // root part of the basis, in basis order
  int dim = 0;

  int rank() const { return rs.rank(); }
  /// Root ref at basis position pos (pos >= rank()), 0 for Cartan positions.
  RootRef root_at(int pos) const { return pos < rank() ? 0 : support[pos - rank()]; }
  /// Basis position of a root ref, or -1 when outside the support.
  int position_of(RootRef r) const {
    auto it = positions.find(r);
    return it == positions.end() ? -1 : it->second;
  }

  std::unordered_map<RootRef, int> positions;
};

/// Linear form on the seaweed, by its values on the basis.
struct LinearForm {
  IntVector coords;
};

/// The witness families of pairs behind the rank bound: H counts the
/// Heisenberg pairs (alpha, eps_K - alpha), and r = |H|, s = dim E_{S,T}
/// give rank(Phi_f) >= 2(r+s) at a generic candidate form.
struct WitnessData {
  long r = 0; // card H = sum of n_K over K(S) plus n_L over K(T)
  long s = 0; // dim E_{S,T}
  int m = 0;  // |K(S)| + |K(T)|
  std::vector<std::pair<RootRef, RootRef>> h1, h2, i1, i2, j;
};

struct VerifyResult {
  long chi = 0;
  long d = 0;
  bool bound_ok = false;
  bool equality = false;
};

/// Assemble g_{S,T}; verifies that R+^S u R-^T is closed under root
/// addition inside R.
Seaweed build_seaweed(const RootSystem& rs, Subset s, Subset t);

/// Matrix of Phi_f(x, y) = f([x, y]) over the seaweed basis.
IntMatrix phi_matrix(const Seaweed& q, const StructureConstants& sc, const LinearForm& f);

/// dim q minus the maximal rank of Phi_f over `trials` seeded random integer
/// forms with coordinates in [-2^20, 2^20]. Always an upper bound on the
/// index chi(q); equal to it unless every trial misses the generic-rank
/// locus (Schwartz-Zippel: probability < dim/2^21 per trial).
long generic_index(const Seaweed& q, const StructureConstants& sc, int trials,
                   std::uint64_t seed);

/// d_{S,T} = rg(g) + |K(S)| + |K(T)| - 2 dim E_{S,T}.
long d_bound(const RootSystem& rs, Subset s, Subset t);

/// f = sum a_K X*_{eps_K} + sum b_L X*_{-eps_L}, coefficients assigned in
/// the fixed order on the eps_K, then the eps_L. All must be nonzero.
LinearForm candidate_form(const Seaweed& q, const std::vector<long>& omega);

WitnessData witness_quantities(const Seaweed& q);

/// True iff rank(Phi_f) >= 2(r+s) at a candidate form: the given omega if
/// nonempty, else a seeded random one; retries once with fresh coefficients
/// before reporting false.
bool check_rank_bound(const Seaweed& q, const StructureConstants& sc,
                      const std::vector<long>& omega, std::uint64_t seed);

/// Exact rational basis of ker Phi_f.
std::vector<RatVector> kernel_basis(const Seaweed& q, const StructureConstants& sc,
                                    const LinearForm& f);

/// T with chi(g_{Pi,T}) = i, for 0 <= i <= rank. Large indices come from the
/// cascade chain of Pi; the remaining small ones from the type-specific
/// constructions (type A interleaved T_k, D_{2k+1} single spine root, E6).
Subset parabolic_of_index(const RootSystem& rs, int i);

VerifyResult verify_pair(const RootSystem& rs, const StructureConstants& sc, Subset s,
                         Subset t, std::uint64_t seed, int trials = 3);

} // namespace seaweed

#endif
