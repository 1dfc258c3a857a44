#ifndef SEAWEED_CASCADE_HPP
#define SEAWEED_CASCADE_HPP

#include "seaweed/rootsys.hpp"

#include <span>
#include <vector>

namespace seaweed {

/// One member K of a cascade, with its highest root eps_K and the
/// Heisenberg layer Gamma^K = { alpha in R+^K : <alpha, eps_K^vee> > 0 }.
/// Roots are stored as indices into rs.positive_roots().
struct CascadeMember {
  Subset subset;
  int epsilon = -1;
  std::vector<int> gamma;  // includes epsilon, in the fixed order
  std::vector<int> gamma0; // gamma without epsilon; |gamma0| = 2 n_pairs
  int n_pairs = 0;
};

/// The cascade K(S), members ordered by eps_K in the fixed order on R+.
struct CascadeSet {
  Subset source;
  std::vector<CascadeMember> members;

  int size() const { return static_cast<int>(members.size()); }
};

/// Recursive cascade of strongly orthogonal highest roots:
/// K(empty) = empty; K(S) = union over connected components; for connected S,
/// K(S) = {S} u K({ alpha in S : <alpha, eps_S^vee> = 0 }).
CascadeSet cascade(const RootSystem& rs, Subset s);

/// k_g = |K(Pi)|, a constant of the type.
int kg(const RootSystem& rs);

/// Exact dimension of the span of all eps_K for the members of the given
/// cascade sets (duplicates harmless).
long dim_span_epsilons(const RootSystem& rs, std::span<const CascadeSet> sets);

/// Chain S_1 c ... c S_n = S with |K(S_i)| = i and K(S_i) c K(S_{i+1}),
/// built by repeatedly stripping K \ K' from the least-indexed connected
/// component K, where K' = { alpha in K : <alpha, eps_K^vee> = 0 }.
std::vector<Subset> cascade_chain(const RootSystem& rs, Subset s);

} // namespace seaweed

#endif
