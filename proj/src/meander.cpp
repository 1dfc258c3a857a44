#include "seaweed/meander.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace seaweed {

namespace {

std::vector<int> blocks_from_subset(Subset s, int n) {
  // missing simple root i cuts between positions i and i+1
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (s.contains(i)) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return parts;
}

void add_arcs(std::vector<int>& partner, const std::vector<int>& parts) {
  int offset = 0;
  for (int len : parts) {
    for (int i = 0; i < len - 1 - i; ++i) {
      partner[offset + i] = offset + len - 1 - i;
      partner[offset + len - 1 - i] = offset + i;
    }
    offset += len;
  }
}

} // namespace

CompositionPair compositions_from_subsets(const RootSystem& rs, Subset s, Subset t) {
  if (rs.type().letter != 'A')
    throw std::invalid_argument("compositions_from_subsets: type A only");
  CompositionPair cp;
  cp.n = rs.rank() + 1;
  cp.a = blocks_from_subset(s, cp.n);
  cp.b = blocks_from_subset(t, cp.n);
  return cp;
}

MeanderGraph build_meander(const CompositionPair& cp) {
  if (cp.n < 1 || std::accumulate(cp.a.begin(), cp.a.end(), 0) != cp.n ||
      std::accumulate(cp.b.begin(), cp.b.end(), 0) != cp.n)
    throw std::invalid_argument("build_meander: compositions must sum to n");
  for (int v : cp.a)
    if (v < 1) throw std::invalid_argument("build_meander: nonpositive part");
  for (int v : cp.b)
    if (v < 1) throw std::invalid_argument("build_meander: nonpositive part");

  MeanderGraph g;
  g.n = cp.n;
  g.top.assign(cp.n, -1);
  g.bottom.assign(cp.n, -1);
  add_arcs(g.top, cp.a);
  add_arcs(g.bottom, cp.b);

  std::vector<bool> seen(cp.n, false);
  for (int v = 0; v < cp.n; ++v) {
    if (seen[v]) continue;
    // walk the component, alternating arc layers
    std::vector<int> stack{v};
    std::vector<int> comp;
    seen[v] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : {g.top[u], g.bottom[u]}) {
        if (w >= 0 && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    bool cycle = true;
    for (int u : comp)
      cycle &= g.top[u] >= 0 && g.bottom[u] >= 0; // all degree 2
    if (cycle)
      ++g.cycles;
    else
      ++g.paths;
  }
  return g;
}

int meander_index_sl(const CompositionPair& cp) {
  const MeanderGraph g = build_meander(cp);
  return 2 * g.cycles + g.paths - 1;
}

std::string meander_svg(const CompositionPair& cp) {
  const MeanderGraph g = build_meander(cp);
  const int step = 40, margin = 40;
  const int width = margin * 2 + step * (g.n - 1);
  const int height = 2 * (margin + step * g.n / 4) + 20;
  const int base = height / 2;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\">\n";
  os << "  <line x1=\"" << margin - 10 << "\" y1=\"" << base << "\" x2=\""
     << width - margin + 10 << "\" y2=\"" << base << "\" stroke=\"#999\"/>\n";
  auto arc = [&](int u, int v, bool up) {
    const int x1 = margin + step * u, x2 = margin + step * v;
    const int r = (x2 - x1) / 2;
    os << "  <path d=\"M " << x1 << " " << base << " A " << r << " " << r << " 0 0 "
       << (up ? 1 : 0) << " " << x2 << " " << base << "\" fill=\"none\" stroke=\""
       << (up ? "#1965b0" : "#dc050c") << "\" stroke-width=\"2\"/>\n";
  };
  for (int u = 0; u < g.n; ++u) {
    if (g.top[u] > u) arc(u, g.top[u], true);
    if (g.bottom[u] > u) arc(u, g.bottom[u], false);
  }
  for (int u = 0; u < g.n; ++u)
    os << "  <circle cx=\"" << margin + step * u << "\" cy=\"" << base
       << "\" r=\"4\" fill=\"#333\"/>\n";
  os << "</svg>\n";
  return os.str();
}

} // namespace seaweed
