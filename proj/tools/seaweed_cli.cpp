#include "seaweed/meander.hpp"
#include "seaweed/prng.hpp"
#include "seaweed/seaweed.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

using json = nlohmann::ordered_json;
using namespace seaweed;

namespace {

struct Options {
  std::string type = "A";
  int rank = 1;
  std::string s = "none";
  std::string t = "none";
  long long seed = 42;
  bool seed_given = false;
  int trials = 3;
  std::string output = "text";
  long max_pairs = 256;
  int index = 0;
  std::string svg_path;
  bool dump_phi = false;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed_given) return static_cast<std::uint64_t>(o.seed);
  if (const char* env = std::getenv("SEAWEED_SEED")) return std::strtoull(env, nullptr, 10);
  return static_cast<std::uint64_t>(o.seed);
}

SimpleType type_of(const Options& o) {
  if (o.type.size() != 1) throw std::invalid_argument("type must be a single letter A..G");
  return simple_type(static_cast<char>(std::toupper(o.type[0])), o.rank);
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.output == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json base_json(const Options& o, const std::string& command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  j["type"] = to_string(type_of(o));
  return j;
}

int cmd_kg(const Options& o) {
  const auto rs = build_root_system(type_of(o));
  const int k = kg(rs);
  json j = base_json(o, "kg");
  j["k"] = k;
  emit(o, j, "k_g(" + to_string(rs.type()) + ") = " + std::to_string(k) + "\n");
  return 0;
}

int cmd_cascade(const Options& o) {
  const auto rs = build_root_system(type_of(o));
  const Subset s = parse_subset(o.s, rs.rank());
  const auto cs = cascade(rs, s);
  json j = base_json(o, "cascade");
  j["s"] = format_subset(s);
  j["members"] = json::array();
  std::string text = "cascade of " + format_subset(s) + " in " + to_string(rs.type()) + ": " +
                     std::to_string(cs.size()) + " member(s)\n";
  for (const auto& m : cs.members) {
    json mj;
    mj["subset"] = format_subset(m.subset);
    mj["epsilon_coeffs"] = rs.positive_roots()[m.epsilon].coeffs;
    mj["gamma_size"] = m.gamma.size();
    j["members"].push_back(mj);
    text += "  K = " + format_subset(m.subset) + "  eps = [";
    const auto& c = rs.positive_roots()[m.epsilon].coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) text += (i ? "," : "") + std::to_string(c[i]);
    text += "]  |Gamma| = " + std::to_string(m.gamma.size()) + "\n";
  }
  emit(o, j, text);
  return 0;
}

int cmd_index(const Options& o) {
  const auto rs = build_root_system(type_of(o));
  const Subset s = parse_subset(o.s, rs.rank());
  const Subset t = parse_subset(o.t, rs.rank());
  const auto sc = StructureConstants::build(rs);
  const auto q = build_seaweed(rs, s, t);
  const std::uint64_t seed = resolve_seed(o);
  const long chi = generic_index(q, sc, o.trials, seed);
  const long d = d_bound(rs, s, t);

  json j = base_json(o, "index");
  j["s"] = format_subset(s);
  j["t"] = format_subset(t);
  j["seed"] = seed;
  j["trials"] = o.trials;
  j["dim"] = q.dim;
  j["chi"] = chi;
  j["d"] = d;
  if (o.dump_phi) {
    // matrix at the form of the first trial, as JSON rows of integers
    SplitMix64 g(mix_seed(seed, 0));
    LinearForm f;
    f.coords = IntVector(q.dim);
    for (int i = 0; i < q.dim; ++i) f.coords(i) = g.symmetric(1L << 20);
    const IntMatrix m = phi_matrix(q, sc, f);
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(row);
    }
    j["phi"] = rows;
  }
  emit(o, j,
       "chi = " + std::to_string(chi) + "\nd = " + std::to_string(d) +
           "\ndim = " + std::to_string(q.dim) + "\n");
  return 0;
}

int cmd_bound(const Options& o) {
  const auto rs = build_root_system(type_of(o));
  const Subset s = parse_subset(o.s, rs.rank());
  const Subset t = parse_subset(o.t, rs.rank());
  const long d = d_bound(rs, s, t);
  json j = base_json(o, "bound");
  j["s"] = format_subset(s);
  j["t"] = format_subset(t);
  j["d"] = d;
  emit(o, j, "d = " + std::to_string(d) + "\n");
  return 0;
}

int cmd_verify(const Options& o) {
  const auto rs = build_root_system(type_of(o));
  const auto sc = StructureConstants::build(rs);
  const int l = rs.rank();
  const std::uint64_t seed = resolve_seed(o);
  const std::uint64_t side = 1ull << l;
  const std::uint64_t total = side * side;

  std::vector<std::uint64_t> codes;
  if (o.max_pairs > 0 && total > static_cast<std::uint64_t>(o.max_pairs)) {
    std::set<std::uint64_t> picked;
    SplitMix64 g(mix_seed(seed, 0x5a3d7ULL));
    while (picked.size() < static_cast<std::size_t>(o.max_pairs)) picked.insert(g.below(total));
    codes.assign(picked.begin(), picked.end());
  } else {
    codes.resize(total);
    for (std::uint64_t c = 0; c < total; ++c) codes[c] = c;
  }

  // Fan the pairs out to a small worker pool; per-pair seeds make the
  // results independent of scheduling, and reporting goes by code order.
  std::vector<VerifyResult> results(codes.size());
  {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= codes.size() || failed.load()) return;
        const Subset s(static_cast<std::uint32_t>(codes[i] / side));
        const Subset t(static_cast<std::uint32_t>(codes[i] % side));
        try {
          results[i] = verify_pair(rs, sc, s, t, mix_seed(seed, codes[i]), o.trials);
        } catch (...) {
          failed.store(true);
        }
      }
    };
    const unsigned n = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < n; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failed.load()) throw std::invalid_argument("verification worker failed");
  }

  json pairs = json::array();
  std::string text;
  bool all_bound = true, all_equal = true;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const std::uint64_t code = codes[i];
    const Subset s(static_cast<std::uint32_t>(code / side));
    const Subset t(static_cast<std::uint32_t>(code % side));
    const auto& res = results[i];
    all_bound &= res.bound_ok;
    all_equal &= res.equality;
    json pj;
    pj["s"] = format_subset(s);
    pj["t"] = format_subset(t);
    pj["chi"] = res.chi;
    pj["d"] = res.d;
    pj["bound_ok"] = res.bound_ok;
    pj["equality"] = res.equality;
    pairs.push_back(pj);
    text += "S=" + format_subset(s) + " T=" + format_subset(t) + " chi=" +
            std::to_string(res.chi) + " d=" + std::to_string(res.d) +
            (res.bound_ok ? "" : " BOUND-VIOLATION") + (res.equality ? "" : " INEQUALITY") +
            "\n";
  }
  json j = base_json(o, "verify");
  j["seed"] = seed;
  j["trials"] = o.trials;
  j["num_pairs"] = codes.size();
  j["sampled"] = codes.size() < total;
  j["pairs"] = pairs;
  j["all_bound_ok"] = all_bound;
  j["all_equality"] = all_equal;
  text += "pairs: " + std::to_string(codes.size()) + "  bound_ok: " +
          (all_bound ? "all" : "VIOLATED") + "  equality: " + (all_equal ? "all" : "failed") +
          "\n";
  emit(o, j, text);
  if (!all_bound) return 3;
  if (!all_equal) return 1;
  return 0;
}

int cmd_parabolic(const Options& o) {
  const auto rs = build_root_system(type_of(o));
  const Subset t = parabolic_of_index(rs, o.index);
  const auto sc = StructureConstants::build(rs);
  const auto q = build_seaweed(rs, Subset::full(rs.rank()), t);
  const long chi = generic_index(q, sc, o.trials, resolve_seed(o));
  json j = base_json(o, "construct-parabolic");
  j["index"] = o.index;
  j["t"] = format_subset(t);
  j["chi"] = chi;
  j["verified"] = chi == o.index;
  emit(o, j,
       "T = " + format_subset(t) + "\nchi = " + std::to_string(chi) + " (requested " +
           std::to_string(o.index) + ")\n");
  return chi == o.index ? 0 : 1;
}

int cmd_meander(const Options& o) {
  const auto rs = build_root_system(type_of(o));
  const Subset s = parse_subset(o.s, rs.rank());
  const Subset t = parse_subset(o.t, rs.rank());
  const auto cp = compositions_from_subsets(rs, s, t);
  const auto g = build_meander(cp);
  const int idx = meander_index_sl(cp);
  json j = base_json(o, "meander");
  j["s"] = format_subset(s);
  j["t"] = format_subset(t);
  j["a"] = cp.a;
  j["b"] = cp.b;
  j["cycles"] = g.cycles;
  j["paths"] = g.paths;
  j["index"] = idx;
  std::string text = "a = (";
  for (std::size_t i = 0; i < cp.a.size(); ++i) text += (i ? "," : "") + std::to_string(cp.a[i]);
  text += ")  b = (";
  for (std::size_t i = 0; i < cp.b.size(); ++i) text += (i ? "," : "") + std::to_string(cp.b[i]);
  text += ")\ncycles = " + std::to_string(g.cycles) + "  paths = " + std::to_string(g.paths) +
          "\nindex = " + std::to_string(idx) + "\n";
  if (!o.svg_path.empty()) {
    std::ofstream out(o.svg_path);
    if (!out) throw std::invalid_argument("cannot write SVG to " + o.svg_path);
    out << meander_svg(cp);
    j["svg"] = o.svg_path;
    text += "svg written to " + o.svg_path + "\n";
  }
  emit(o, j, text);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"seaweed subalgebra index calculator"};
  app.require_subcommand(1);

  std::vector<CLI::Option*> seed_opts;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--type", o.type, "simple type letter A..G")->required();
    cmd->add_option("--rank", o.rank, "rank of the simple type")->required();
    seed_opts.push_back(
        cmd->add_option("--seed", o.seed, "random seed (default 42 or $SEAWEED_SEED)"));
    cmd->add_option("--trials", o.trials, "random forms per index computation")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* kg_cmd = app.add_subcommand("kg", "cascade cardinality k_g of the type");
  add_common(kg_cmd);

  auto* cascade_cmd = app.add_subcommand("cascade", "cascade K(S) with its Heisenberg layers");
  add_common(cascade_cmd);
  cascade_cmd->add_option("--s", o.s, "subset of simple roots, e.g. 1,3 or none");

  auto* index_cmd = app.add_subcommand("index", "index chi and bound d of g_{S,T}");
  add_common(index_cmd);
  index_cmd->add_option("--s", o.s, "subset S");
  index_cmd->add_option("--t", o.t, "subset T");
  index_cmd->add_flag("--dump-phi", o.dump_phi, "include the Phi_f matrix in JSON output");

  auto* bound_cmd = app.add_subcommand("bound", "combinatorial bound d_{S,T} only");
  add_common(bound_cmd);
  bound_cmd->add_option("--s", o.s, "subset S");
  bound_cmd->add_option("--t", o.t, "subset T");

  auto* verify_cmd =
      app.add_subcommand("verify", "enumerate (S,T) pairs, check chi <= d and chi = d");
  add_common(verify_cmd);
  verify_cmd->add_option("--max-pairs", o.max_pairs,
                         "cap on enumerated pairs; seeded sample beyond it");

  auto* parab_cmd = app.add_subcommand("construct-parabolic", "parabolic with prescribed index");
  add_common(parab_cmd);
  parab_cmd->add_option("--index", o.index, "requested index")->required();

  auto* meander_cmd = app.add_subcommand("meander", "type A meander-graph index oracle");
  add_common(meander_cmd);
  meander_cmd->add_option("--s", o.s, "subset S");
  meander_cmd->add_option("--t", o.t, "subset T");
  meander_cmd->add_option("--svg", o.svg_path, "write the arc diagram to this SVG file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  for (const CLI::Option* opt : seed_opts) o.seed_given |= opt->count() > 0;

  try {
    if (kg_cmd->parsed()) return cmd_kg(o);
    if (cascade_cmd->parsed()) return cmd_cascade(o);
    if (index_cmd->parsed()) return cmd_index(o);
    if (bound_cmd->parsed()) return cmd_bound(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (parab_cmd->parsed()) return cmd_parabolic(o);
    if (meander_cmd->parsed()) return cmd_meander(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
