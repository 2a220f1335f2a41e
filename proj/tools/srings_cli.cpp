// srings: command-line front end.
//
// Exit codes: 0 success / isomorphic / separable, 1 non-isomorphic /
// nonseparable, 2 any error (bad arguments, parse errors, size bounds).

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srings/catalogue.hpp"
#include "srings/comiso.hpp"
#include "srings/construct.hpp"
#include "srings/error.hpp"
#include "srings/wl.hpp"

using namespace srings;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Config {
  std::string format = "text";
  std::uint32_t max_order = 0;  // 0: per-command default
  std::uint32_t seed = 1;
  bool verbose = false;
};

std::uint32_t bound(const Config& cfg, std::uint32_t fallback) { return cfg.max_order ? cfg.max_order : fallback; }

void check_order(const AbelianGroup& g, std::uint32_t limit) {
  if (g.order() > limit)
    fail(ErrorKind::kSize, g.to_string() + " has order " + std::to_string(g.order()) + " above the bound " +
                               std::to_string(limit));
}

// One element literal per line; '#' starts a comment.
ElemSet read_connection_set(const AbelianGroup& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kParse, "cannot open '" + path + "'");
  ElemSet out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(g.parse_element(line));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json to_json(const SRing& a) {
  const auto& g = a.group();
  json classes = json::array();
  for (const auto& c : a.classes()) {
    json row = json::array();
    for (Elem x : c) row.push_back(g.format(x));
    classes.push_back(row);
  }
  return {{"group", g.to_string()}, {"rank", a.rank()}, {"classes", classes}};
}

json to_json(const PointMap& f) {
  json pairs = json::array();
  for (Elem x = 0; x < f.source.order(); ++x) pairs.push_back({f.source.format(x), f.target.format(f(x))});
  return {{"source", f.source.to_string()}, {"target", f.target.to_string()}, {"map", pairs}};
}

void emit(const Config& cfg, const json& j, const std::string& text) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

class Timer {
 public:
  Timer(const Config& cfg, std::string what) : cfg_(cfg), what_(std::move(what)) {}
  ~Timer() {
    if (!cfg_.verbose) return;
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    std::cerr << what_ << ": " << s << "s\n";
  }

 private:
  const Config& cfg_;
  std::string what_;
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

SRing closure_of_files(const AbelianGroup& g, const std::vector<std::string>& files) {
  std::vector<ElemSet> seeds;
  for (const auto& f : files) seeds.push_back(read_connection_set(g, f));
  return cayley_scheme(g, seeds).ring;
}

// ---- subcommands ----

int cmd_scheme(const Config& cfg, const std::string& group, const std::string& file) {
  auto g = AbelianGroup::parse(group);
  check_order(g, bound(cfg, 1024));
  Timer t(cfg, "scheme");
  const ElemSet x = read_connection_set(g, file);
  auto s = cayley_scheme(g, std::span<const ElemSet>(&x, 1));
  emit(cfg, to_json(s.ring), to_text(s.ring));
  return kExitOk;
}

int cmd_closure(const Config& cfg, const std::string& group, const std::vector<std::string>& files) {
  auto g = AbelianGroup::parse(group);
  check_order(g, bound(cfg, 1024));
  Timer t(cfg, "closure");
  auto a = closure_of_files(g, files);
  emit(cfg, to_json(a), to_text(a));
  return kExitOk;
}

int cmd_iso(const Config& cfg, const std::string& ga, const std::string& fa, const std::string& gb,
            const std::string& fb) {
  auto g1 = AbelianGroup::parse(ga);
  auto g2 = AbelianGroup::parse(gb);
  check_order(g1, bound(cfg, 1024));
  check_order(g2, bound(cfg, 1024));
  Timer t(cfg, "iso");
  const ElemSet x1 = read_connection_set(g1, fa);
  const ElemSet x2 = read_connection_set(g2, fb);
  CascadeOptions opts;
  if (cfg.max_order) opts.brute_max_order = cfg.max_order;
  auto r = graph_iso_pipeline(g1, x1, g2, x2, opts);
  json j;
  std::ostringstream text;
  if (r.verdict == PipelineVerdict::kIsomorphic) {
    const auto& c = *r.certificate;
    j = {{"verdict", "iso"}, {"method", to_string(c.method)}, {"certificate", to_json(c.point_map)}};
    text << "verdict=iso method=" << to_string(c.method) << "\n" << to_text(c.point_map);
  } else {
    j = {{"verdict", "non-iso"}, {"obstruction", r.obstruction}};
    text << "verdict=non-iso obstruction=" << r.obstruction << "\n";
  }
  emit(cfg, j, text.str());
  return r.verdict == PipelineVerdict::kIsomorphic ? kExitOk : kExitNo;
}

EnumMethod parse_method(const std::string& m) {
  if (m == "auto") return EnumMethod::kAuto;
  if (m == "partition") return EnumMethod::kPartition;
  if (m == "good-sets") return EnumMethod::kGoodSets;
  fail(ErrorKind::kArgument, "unknown enumeration method '" + m + "'");
}

int cmd_enumerate(const Config& cfg, const std::string& group, const std::string& method, bool count_only) {
  auto g = AbelianGroup::parse(group);
  check_order(g, bound(cfg, kEnumerationMaxOrder));
  Timer t(cfg, "enumerate");
  auto all = enumerate_srings(g, parse_method(method));
  json j = {{"group", g.to_string()}, {"count", all.size()}};
  std::ostringstream text;
  if (!count_only) {
    json list = json::array();
    for (const auto& a : all) {
      list.push_back(to_json(a));
      text << to_text(a) << "\n";
    }
    j["srings"] = list;
  }
  text << "count=" << all.size() << "\n";
  emit(cfg, j, text.str());
  return kExitOk;
}

int cmd_catalogue(const Config& cfg, std::uint32_t p, std::uint32_t i, std::uint32_t k) {
  const auto& row = table_row(p, i);
  auto d = table_group(p, k);
  check_order(d, bound(cfg, 4096));
  auto gens = table_entry(p, i, k);
  auto a = table_sring(p, i, k);
  const std::size_t order = generated_automorphism_group(d, gens).size();
  std::set<std::size_t> n;
  for (const auto& c : a.classes()) n.insert(c.size());
  std::ostringstream text;
  text << "table p=" << p << " K=" << i << " k=" << k << " group=" << d.to_string() << " order=" << order
       << " table_order=" << row.order << "\n";
  for (const auto& f : row.generators) text << "generator " << f << "\n";
  text << "N={";
  for (auto it = n.begin(); it != n.end(); ++it) text << (it == n.begin() ? "" : ",") << *it;
  text << "}\nradical=" << sring_radical(a).order() << "\n" << to_text(a);
  json j = {{"p", p},
            {"index", i},
            {"k", k},
            {"group", d.to_string()},
            {"order", order},
            {"table_order", row.order},
            {"generators", row.generators},
            {"N", n},
            {"radical", sring_radical(a).order()},
            {"sring", to_json(a)}};
  emit(cfg, j, text.str());
  return kExitOk;
}

int cmd_separability(const Config& cfg, const std::string& group, long index, std::size_t sample, bool brute) {
  auto g = AbelianGroup::parse(group);
  check_order(g, bound(cfg, kEnumerationMaxOrder));
  Timer t(cfg, "separability");
  auto all = enumerate_srings(g);
  std::vector<std::size_t> pick;
  if (index >= 0) {
    if (std::size_t(index) >= all.size()) fail(ErrorKind::kArgument, "S-ring index out of range");
    pick.push_back(std::size_t(index));
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) pick.push_back(i);
    if (sample && sample < pick.size()) {
      std::mt19937 rng(cfg.seed);
      std::shuffle(pick.begin(), pick.end(), rng);
      pick.resize(sample);
      std::sort(pick.begin(), pick.end());
    }
  }
  auto targets = separability_targets(g.order());
  SeparabilityOptions opts;
  opts.confirm_with_brute = brute;
  bool separable = true;
  json sources = json::array();
  std::ostringstream text;
  for (std::size_t i : pick) {
    auto r = check_separability(all[i], targets, opts);
    separable = separable && r.separable;
    text << "source=" << i << " group=" << g.to_string() << "\n" << to_text(r);
    json lines = json::array();
    for (const auto& l : r.lines) {
      json e = {{"A", l.target_index},
                {"G'", l.group},
                {"phi", l.phi_index},
                {"verdict", to_string(l.verdict)},
                {"method", l.method ? to_string(*l.method) : "-"}};
      if (!l.detail.empty()) e["detail"] = l.detail;
      lines.push_back(e);
    }
    sources.push_back({{"source", i}, {"separable", r.separable}, {"targets", r.targets_checked}, {"lines", lines}});
  }
  text << "summary group=" << g.to_string() << " sources=" << pick.size() << " separable=" << (separable ? "yes" : "no")
       << "\n";
  emit(cfg, {{"group", g.to_string()}, {"separable", separable}, {"sources", sources}}, text.str());
  return separable ? kExitOk : kExitNo;
}

int cmd_aut(const Config& cfg, const std::string& group, const std::vector<std::string>& files) {
  auto g = AbelianGroup::parse(group);
  const std::uint32_t limit = bound(cfg, kBruteForceMaxOrder);
  check_order(g, limit);
  Timer t(cfg, "aut");
  auto a = closure_of_files(g, files);
  auto aut = aut_group(a, limit);
  std::ostringstream text;
  text << "order=" << aut.order_string() << " rank=" << a.rank() << "\n";
  json gens = json::array();
  for (const auto& level : aut.transversal)
    for (const auto& f : level) {
      if (f == identity_map(g)) continue;
      text << to_text(f);
      gens.push_back(to_json(f));
    }
  emit(cfg, {{"order", aut.order_string()}, {"sring", to_json(a)}, {"generators", gens}}, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur rings, Cayley schemes and Cayley graph isomorphism over small abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-order", cfg.max_order, "Largest group order accepted (0: command default)");
  app.add_option("--seed", cfg.seed, "Seed for sampled runs");
  app.add_flag("-v,--verbose", cfg.verbose, "Timing on stderr");

  std::string ga, gb, fa, fb, method = "auto";
  std::vector<std::string> files;
  std::uint32_t p = 0, idx = 0, k = 0;
  long index = -1;
  std::size_t sample = 0;
  bool count_only = false, brute = false;

  auto* scheme = app.add_subcommand("scheme", "Minimal Cayley scheme of Cay(G, X)");
  scheme->add_option("group", ga)->required();
  scheme->add_option("file", fa, "Connection set, one element per line")->required();

  auto* iso = app.add_subcommand("iso", "Decide Cay(G, X) ~ Cay(G', X')");
  iso->add_option("group", ga)->required();
  iso->add_option("file", fa)->required();
  iso->add_option("group2", gb)->required();
  iso->add_option("file2", fb)->required();

  auto* enumerate = app.add_subcommand("enumerate", "All S-rings over a group");
  enumerate->add_option("group", ga)->required();
  enumerate->add_option("--method", method)->check(CLI::IsMember({"auto", "partition", "good-sets"}));
  enumerate->add_flag("--count-only", count_only);

  auto* catalogue = app.add_subcommand("catalogue", "cyc(K_i, C_p x C_{p^k}) from the tables");
  catalogue->add_option("p", p)->required();
  catalogue->add_option("i", idx)->required();
  catalogue->add_option("k", k)->required();

  auto* separability = app.add_subcommand("separability", "Check every algebraic isomorphism out of each S-ring");
  separability->add_option("group", ga)->required();
  separability->add_option("--index", index, "Only this S-ring of the enumeration");
  separability->add_option("--sample", sample, "Random subset of sources (uses --seed)");
  separability->add_flag("--brute", brute, "Confirm every phi with the brute-force finder");

  auto* closure_cmd = app.add_subcommand("closure", "Least S-ring containing the given sets");
  closure_cmd->add_option("group", ga)->required();
  closure_cmd->add_option("files", files)->required();

  auto* aut = app.add_subcommand("aut", "Automorphism group of the closure of the given sets");
  aut->add_option("group", ga)->required();
  aut->add_option("files", files)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (*scheme) return cmd_scheme(cfg, ga, fa);
    if (*iso) return cmd_iso(cfg, ga, fa, gb, fb);
    if (*enumerate) return cmd_enumerate(cfg, ga, method, count_only);
    if (*catalogue) return cmd_catalogue(cfg, p, idx, k);
    if (*separability) return cmd_separability(cfg, ga, index, sample, brute);
    if (*closure_cmd) return cmd_closure(cfg, ga, files);
    if (*aut) return cmd_aut(cfg, ga, files);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
