#ifndef SEAWEED_CHEVALLEY_HPP
#define SEAWEED_CHEVALLEY_HPP

#include "seaweed/rootsys.hpp"

#include <map>
#include <vector>

namespace seaweed {

/// Signed reference to a root: +(k+1) / -(k+1) for +-positive_roots()[k].
using RootRef = int;

inline int ref_index(RootRef r) { return (r > 0 ? r : -r) - 1; }
inline bool ref_positive(RootRef r) { return r > 0; }

/// Base sign given to the extraspecial pairs; either choice extends to a
/// consistent Chevalley basis of the same algebra, and downstream indices
/// must not depend on it.
enum class SignConvention { standard, flipped };

/// Chevalley structure constants for the full algebra
/// g = h + sum of root spaces:
///
///   [H_i, X_a] = <a, alpha_i^vee> X_a
///   [X_a, X_-a] = H_a (the coroot, integral over the simple coroots)
///   [X_a, X_b]  = N_{a,b} X_{a+b} with |N_{a,b}| = p+1,
///                 p = max{ k : b - k a is a root }.
///
/// Signs: N is fixed to sign*(p+1) on the extraspecial pair of each
/// non-simple positive root (the pair (a, b), a < b in the fixed order on
/// R+, a+b = c, with a minimal), then propagated to all other pairs with
/// the Jacobi identity, by increasing height of the sum. Mixed-sign and
/// negative pairs reduce to positive ones through the invariance relations
/// N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) (a+b+c = 0) and
/// N_{-a,-b} = -N_{a,b}.
///
/// Construction self-checks |N| = p+1 on every pair and spot-checks the
/// Jacobi identity (exhaustively at rank <= 3); failures throw
/// std::logic_error since they can only indicate an implementation bug.
class StructureConstants {
public:
  static StructureConstants build(const RootSystem& rs,
                                  SignConvention sign = SignConvention::standard);

  /// N_{a,b}; zero when a+b is not a root. Requires a + b != 0.
  long n(RootRef a, RootRef b) const;

  /// p of the a-string through b, for the pair magnitude |N| = p+1.
  int string_down(RootRef a, RootRef b) const;

  /// Coordinates of the coroot H_alpha over the simple coroots H_1..H_l.
  const IntVector& coroot(int positive_idx) const { return coroots_[positive_idx]; }

  const RootSystem& root_system() const { return rs_; }
  SignConvention sign_convention() const { return sign_; }

private:
  RootSystem rs_;
  SignConvention sign_ = SignConvention::standard;
  std::vector<long> pos_n_; // dense npos x npos table for positive pairs
  std::vector<IntVector> coroots_;

  long pos_entry(int i, int j) const;
  long mixed(int xi, int eta) const; // N_{x, -y} for positive indices
};

/// Sparse element of g, for bracket arithmetic in checks and tests.
struct LieElement {
  IntVector h;                 // coordinates over H_1..H_l
  std::map<RootRef, long> x;   // root vector coordinates

  static LieElement zero(int rank);
  bool is_zero() const;
};

LieElement bracket(const StructureConstants& sc, const LieElement& a, const LieElement& b);
LieElement cartan_element(const RootSystem& rs, int i);  // H_{i+1}
LieElement root_element(const RootSystem& rs, RootRef r); // X_r

/// Jacobi identity over basis triples; exhaustive when samples == 0,
/// otherwise that many seeded random triples.
bool jacobi_identity_holds(const StructureConstants& sc, long samples, std::uint64_t seed);

} // namespace seaweed

#endif
