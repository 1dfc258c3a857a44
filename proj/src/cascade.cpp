#include "seaweed/cascade.hpp"

#include <algorithm>
#include <stdexcept>

namespace seaweed {

namespace {

void cascade_into(const RootSystem& rs, Subset s, std::vector<CascadeMember>& out) {
  if (s.empty()) return;
  const auto comps = connected_components(rs, s);
  if (comps.size() > 1) {
    for (Subset c : comps) cascade_into(rs, c, out);
    return;
  }

  CascadeMember m;
  m.subset = s;
  m.epsilon = highest_root_index(rs, s);
  const auto& eps = rs.positive_roots()[m.epsilon].coeffs;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (!rs.support(k).is_subset_of(s)) continue;
    if (rs.pairing_with_coroot(rs.positive_roots()[k].coeffs, eps) > 0) {
      m.gamma.push_back(k);
      if (k != m.epsilon) m.gamma0.push_back(k);
    }
  }
  if (m.gamma0.size() % 2 != 0) throw std::logic_error("odd Heisenberg layer");
  m.n_pairs = static_cast<int>(m.gamma0.size()) / 2;
  out.push_back(std::move(m));

  Subset rest;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (!s.contains(i)) continue;
    std::vector<int> alpha(rs.rank(), 0);
    alpha[i - 1] = 1;
    if (rs.pairing_with_coroot(alpha, eps) == 0) rest.add(i);
  }
  cascade_into(rs, rest, out);
}

} // namespace

CascadeSet cascade(const RootSystem& rs, Subset s) {
  CascadeSet cs;
  cs.source = s;
  cascade_into(rs, s, cs.members);
  std::sort(cs.members.begin(), cs.members.end(),
            [](const CascadeMember& a, const CascadeMember& b) { return a.epsilon < b.epsilon; });
  return cs;
}

int kg(const RootSystem& rs) { return cascade(rs, Subset::full(rs.rank())).size(); }

long dim_span_epsilons(const RootSystem& rs, std::span<const CascadeSet> sets) {
  int rows = 0;
  for (const auto& cs : sets) rows += cs.size();
  if (rows == 0) return 0;
  IntMatrix m(rows, rs.rank());
  int r = 0;
  for (const auto& cs : sets) {
    for (const auto& member : cs.members) {
      const auto& eps = rs.positive_roots()[member.epsilon].coeffs;
      for (int j = 0; j < rs.rank(); ++j) m(r, j) = eps[j];
      ++r;
    }
  }
  return bareiss_rank(m);
}

std::vector<Subset> cascade_chain(const RootSystem& rs, Subset s) {
  std::vector<Subset> chain;
  Subset cur = s;
  while (!cur.empty()) {
    chain.push_back(cur);
    const Subset k = connected_components(rs, cur).front();
    const auto& eps = rs.positive_roots()[highest_root_index(rs, k)].coeffs;
    Subset kept;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!k.contains(i)) continue;
      std::vector<int> alpha(rs.rank(), 0);
      alpha[i - 1] = 1;
      if (rs.pairing_with_coroot(alpha, eps) == 0) kept.add(i);
    }
    cur = cur.minus(k) | kept;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

} // namespace seaweed
