#include "seaweed/rootsys.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace seaweed {

namespace {

bool rank_valid(char letter, int rank) {
  switch (letter) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 3;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

int classical_positive_count(const SimpleType& t) {
  const int l = t.rank;
  switch (t.letter) {
    case 'A': return l * (l + 1) / 2;
    case 'B':
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'E': return l == 6 ? 36 : (l == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

// cartan(i, j) = <alpha_i, alpha_j^vee> and d_i = (alpha_i, alpha_i)/2,
// short roots normalized to squared length 2, Bourbaki numbering.
void fill_cartan(const SimpleType& t, IntMatrix& c, std::vector<int>& d) {
  const int l = t.rank;
  c = IntMatrix::Zero(l, l);
  d.assign(l, 1);
  for (int i = 0; i < l; ++i) c(i, i) = 2;
  auto edge = [&](int i, int j) { c(i, j) = c(j, i) = -1; }; // 0-based
  switch (t.letter) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case 'B': // alpha_l short
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
      c(l - 2, l - 1) = -2;
      c(l - 1, l - 2) = -1;
      for (int i = 0; i + 1 < l; ++i) d[i] = 2;
      break;
    case 'C': // alpha_l long
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
      c(l - 2, l - 1) = -1;
      c(l - 1, l - 2) = -2;
      d[l - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
      edge(l - 3, l - 1);
      break;
    case 'E':
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case 'F':
      edge(0, 1);
      c(1, 2) = -2;
      c(2, 1) = -1;
      edge(2, 3);
      d[0] = d[1] = 2;
      break;
    case 'G':
      c(0, 1) = -1;
      c(1, 0) = -3;
      d[1] = 3;
      break;
  }
}

std::uint64_t pack_coeffs(const std::vector<int>& c) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < -8 || c[i] > 8) throw std::logic_error("root coefficient out of packable range");
    key |= static_cast<std::uint64_t>(c[i] + 8) << (5 * i);
  }
  return key;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

long pairing_num_den(const IntMatrix& form, const std::vector<int>& lam,
                     const std::vector<int>& alpha) {
  // 2 (lam, alpha) / (alpha, alpha)
  long num = 0, den = 0;
  const int l = static_cast<int>(form.rows());
  for (int i = 0; i < l; ++i) {
    long fi_lam = 0, fi_alpha = 0;
    for (int j = 0; j < l; ++j) {
      fi_lam += form(i, j) * lam[j];
      fi_alpha += form(i, j) * alpha[j];
    }
    num += fi_lam * alpha[i];
    den += fi_alpha * alpha[i];
  }
  num *= 2;
  if (den == 0 || num % den != 0) throw std::logic_error("non-integral Cartan pairing");
  return num / den;
}

} // namespace

SimpleType simple_type(char letter, int rank) {
  if (!rank_valid(letter, rank)) {
    std::ostringstream os;
    os << "invalid simple type " << letter << "_" << rank;
    throw std::invalid_argument(os.str());
  }
  return SimpleType{letter, rank};
}

std::string to_string(const SimpleType& t) {
  std::ostringstream os;
  os << t.letter << t.rank;
  return os.str();
}

Subset parse_subset(const std::string& text, int rank) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  Subset out;
  if (s.empty() || s == "none") return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad subset literal: '" + text + "'");
    }
    if (pos != item.size() || v < 1 || v > rank)
      throw std::invalid_argument("subset index out of range in '" + text + "'");
    out.add(v);
  }
  return out;
}

std::string format_subset(Subset s) {
  if (s.empty()) return "none";
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= 32; ++i) {
    if (!s.contains(i)) continue;
    if (!first) os << ",";
    os << i;
    first = false;
  }
  return os.str();
}

int RootSystem::positive_index(const std::vector<int>& coeffs) const {
  for (int c : coeffs)
    if (c < -8 || c > 8) return -1;
  auto it = data_->index.find(pack_coeffs(coeffs));
  return it == data_->index.end() ? -1 : it->second;
}

bool RootSystem::is_root(const std::vector<int>& coeffs) const {
  bool any_pos = false, any_neg = false;
  for (int c : coeffs) {
    any_pos |= c > 0;
    any_neg |= c < 0;
  }
  if (any_pos && any_neg) return false;
  if (!any_pos && !any_neg) return false; // zero vector
  if (any_pos) return positive_index(coeffs) >= 0;
  std::vector<int> neg(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  return positive_index(neg) >= 0;
}

long RootSystem::pairing_with_coroot(const std::vector<int>& lam,
                                     const std::vector<int>& alpha) const {
  return pairing_num_den(data_->form, lam, alpha);
}

RootSystem build_root_system(SimpleType t) {
  simple_type(t.letter, t.rank); // validate
  RootSystem::Data d;
  d.type = t;
  fill_cartan(t, d.cartan, d.simple_d);

  const int l = t.rank;
  d.form = IntMatrix::Zero(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) d.form(i, j) = d.cartan(i, j) * d.simple_d[j];
  if (d.form != d.form.transpose().eval())
    throw std::logic_error("symmetric form is not symmetric");

  // Closure from the Cartan matrix: walk root strings upward by height.
  std::map<std::vector<int>, int> seen; // coeffs -> height
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    seen.emplace(e, 1);
    frontier.push_back(e);
  }
  int height = 1;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < l; ++i) {
        // p = how far the alpha_i-string through beta extends downward
        int p = 0;
        std::vector<int> down = beta;
        for (;;) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](int c) { return c == 0; });
          bool nonneg = std::all_of(down.begin(), down.end(), [](int c) { return c >= 0; });
          if (zero || !nonneg || !seen.count(down)) break;
          ++p;
        }
        long pair = 0;
        for (int j = 0; j < l; ++j) pair += beta[j] * d.cartan(j, i);
        if (p - pair >= 1) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (seen.emplace(up, height + 1).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
    ++height;
  }

  d.positive.reserve(seen.size());
  for (const auto& [coeffs, h] : seen) d.positive.push_back(Root{coeffs, h});
  std::sort(d.positive.begin(), d.positive.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return lex_less(a.coeffs, b.coeffs);
  });

  if (static_cast<int>(d.positive.size()) != classical_positive_count(t))
    throw std::logic_error("positive root count self-check failed for " + to_string(t));

  for (std::size_t k = 0; k < d.positive.size(); ++k) {
    const auto& c = d.positive[k].coeffs;
    d.index.emplace(pack_coeffs(c), static_cast<int>(k));
    long sq = 0;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) sq += c[i] * d.form(i, j) * c[j];
    if (sq % 2 != 0 || sq / 2 < 1 || sq / 2 > 3)
      throw std::logic_error("unexpected root length");
    d.root_d.push_back(static_cast<int>(sq / 2));
    Subset sup;
    for (int i = 0; i < l; ++i)
      if (c[i] != 0) sup.add(i + 1);
    d.support.push_back(sup);
  }

  RootSystem rs;
  rs.data_ = std::make_shared<const RootSystem::Data>(std::move(d));
  return rs;
}

long pairing(const RootSystem& rs, const Root& lam, const Root& alpha) {
  if (!rs.is_root(alpha.coeffs)) throw std::invalid_argument("pairing: alpha is not a root");
  return rs.pairing_with_coroot(lam.coeffs, alpha.coeffs);
}

std::vector<Subset> connected_components(const RootSystem& rs, Subset s) {
  std::vector<Subset> out;
  Subset left = s;
  const int l = rs.rank();
  while (!left.empty()) {
    int start = 0;
    for (int i = 1; i <= l; ++i) {
      if (left.contains(i)) {
        start = i;
        break;
      }
    }
    Subset comp;
    std::vector<int> stack{start};
    comp.add(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 1; w <= l; ++w) {
        if (left.contains(w) && !comp.contains(w) && rs.adjacent(v - 1, w - 1)) {
          comp.add(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(comp);
    left = left.minus(comp);
  }
  return out;
}

int highest_root_index(const RootSystem& rs, Subset s) {
  if (s.empty()) throw std::invalid_argument("highest_root: empty subset");
  if (connected_components(rs, s).size() != 1)
    throw std::invalid_argument("highest_root: subset is not connected");
  int best = -1;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (rs.support(k).is_subset_of(s)) best = k; // fixed order ends at max height
  // Post-check: every other positive root of the subsystem pairs to 0 or 1
  // against eps_S^vee (eps_S is the long highest root of R^S).
  const auto& eps = rs.positive_roots()[best].coeffs;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (k == best || !rs.support(k).is_subset_of(s)) continue;
    long v = rs.pairing_with_coroot(rs.positive_roots()[k].coeffs, eps);
    if (v != 0 && v != 1)
      throw std::logic_error("highest-root pairing outside {0,1}");
  }
  return best;
}

Root highest_root(const RootSystem& rs, Subset s) {
  return rs.positive_roots()[highest_root_index(rs, s)];
}

bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b) {
  const std::size_t l = a.coeffs.size();
  std::vector<int> sum(l), diff(l), neg(l);
  bool equal = true, opposite = true;
  for (std::size_t i = 0; i < l; ++i) {
    sum[i] = a.coeffs[i] + b.coeffs[i];
    diff[i] = a.coeffs[i] - b.coeffs[i];
    equal &= a.coeffs[i] == b.coeffs[i];
    opposite &= a.coeffs[i] == -b.coeffs[i];
  }
  if (equal || opposite) return false;
  return !rs.is_root(sum) && !rs.is_root(diff);
}

} // namespace seaweed
