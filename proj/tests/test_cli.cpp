#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "oracles.hpp"
#include "srings/catalogue.hpp"
#include "srings/comiso.hpp"
#include "srings/sring.hpp"

using namespace srings;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SRINGS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(SRINGS_SOURCE_DIR) + "/tests/data/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_set(const AbelianGroup& g, const ElemSet& x, const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "srings_cli_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream out(path);
  for (Elem e : x) out << g.format(e) << "\n";
  return path;
}

// Parses the "pointmap" block that follows the verdict line.
PointMap parse_certificate(const std::string& text, const AbelianGroup& g1, const AbelianGroup& g2) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // verdict
  std::getline(in, line);  // pointmap header
  PointMap f{g1, g2, std::vector<Elem>(g1.order(), kNoElem)};
  while (std::getline(in, line)) {
    auto arrow = line.find(" -> ");
    f.image[g1.parse_element(line.substr(0, arrow))] = g2.parse_element(line.substr(arrow + 4));
  }
  return f;
}

bool maps_edges_exactly(const PointMap& f, const ElemSet& x1, const ElemSet& x2) {
  std::vector<char> in2(f.target.order(), 0);
  for (Elem e : x2) in2[e] = 1;
  std::vector<char> in1(f.source.order(), 0);
  for (Elem e : x1) in1[e] = 1;
  for (Elem u = 0; u < f.source.order(); ++u)
    for (Elem v = 0; v < f.source.order(); ++v)
      if (in1[f.source.sub(v, u)] != in2[f.target.sub(f(v), f(u))]) return false;
  return true;
}

}  // namespace

TEST(Cli, SchemeExamples) {
  auto r = run("scheme C5 " + data("pentagon.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_sring(r.out).rank(), 3u);
  r = run("scheme C2xC2 " + data("all.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_sring(r.out).rank(), 2u);
  r = run("scheme C2xC16 " + data("k5-highest.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_file(std::string(SRINGS_SOURCE_DIR) + "/tests/golden/cyc_p2_K5_k4.txt"));
}

TEST(Cli, ClosureAndAut) {
  auto r = run("closure C5 " + data("pentagon.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_sring(r.out).rank(), 3u);
  r = run("aut C5 " + data("pentagon.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("order=10 rank=3\n", 0), 0u) << r.out;
  r = run("--format json aut C2xC2 " + data("all.txt"));
  EXPECT_EQ(json::parse(r.out)["order"], "24");
}

TEST(Cli, IsoExamples) {
  auto g = AbelianGroup::parse("C2xC8");
  auto r = run("iso C2xC8 " + data("c2c8_x.txt") + " C2xC8 " + data("c2c8_x.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("verdict=iso", 0), 0u);
  auto f = parse_certificate(r.out, g, g);
  EXPECT_EQ(f, identity_map(g));
  // valency mismatch
  r = run("iso C2xC8 " + data("c2c8_x.txt") + " C2xC8 " + data("c2c8_z.txt"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("verdict=non-iso obstruction=", 0), 0u);
  r = run("iso C2xC8 " + data("c2c8_x.txt") + " C2xC8 " + data("c2c8_y.txt"));
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, IsoAgreesWithGraphOracleOnCThreeByCNine) {
  auto g = AbelianGroup::parse("C3xC9");
  auto autos = automorphisms(g);
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
  int agree = 0, isos = 0;
  for (int t = 0; t < 12; ++t) {
    ElemSet x = testing_helpers::random_subset(g, rng, 0.2);
    ElemSet y;
    if (t % 2 == 0) {
      auto tab = autos[pick(rng)].table();
      for (Elem e : x) y.push_back(tab[e]);
      std::sort(y.begin(), y.end());
    } else {
      // same size, otherwise random
      std::vector<Elem> all;
      for (Elem e = 1; e < g.order(); ++e) all.push_back(e);
      std::shuffle(all.begin(), all.end(), rng);
      y.assign(all.begin(), all.begin() + x.size());
      std::sort(y.begin(), y.end());
    }
    auto r = run("iso C3xC9 " + write_set(g, x, "x.txt") + " C3xC9 " + write_set(g, y, "y.txt"));
    ASSERT_NE(r.code, 2);
    const bool want = oracle::graphs_isomorphic(oracle::cayley_adjacency(g, x), oracle::cayley_adjacency(g, y), true);
    agree += (r.code == 0) == want;
    if (r.code == 0) {
      ++isos;
      EXPECT_TRUE(maps_edges_exactly(parse_certificate(r.out, g, g), x, y));
    }
  }
  EXPECT_EQ(agree, 12);
  EXPECT_GE(isos, 6);
}

TEST(Cli, EnumerateCatalogueSeparability) {
  auto r = run("enumerate C3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count=2\n"), std::string::npos);
  r = run("enumerate --count-only --method partition C2xC4");
  EXPECT_EQ(r.out, "count=28\n");
  r = run("catalogue 3 6 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("N={1,3}\n"), std::string::npos);
  EXPECT_NE(r.out.find("order=3 table_order=3"), std::string::npos);
  r = run("separability C2xC4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("summary group=C2xC4 sources=28 separable=yes"), std::string::npos);
  r = run("separability --index 3 --brute C2xC4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("source=3 group=C2xC4\n", 0), 0u);
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(run("scheme C2x " + data("pentagon.txt")).code, 2);
  EXPECT_EQ(run("scheme C5 /nonexistent/file").code, 2);
  EXPECT_EQ(run("scheme C4 " + data("all.txt")).code, 2);  // arity
  EXPECT_EQ(run("catalogue 2 5 3").code, 2);
  EXPECT_EQ(run("catalogue 5 1 3").code, 2);
  EXPECT_EQ(run("enumerate C2xC2xC2xC2xC2").code, 2);
  EXPECT_EQ(run("--max-order 8 enumerate C16").code, 2);
  EXPECT_EQ(run("iso C4xC4 " + data("all.txt") + " C4xC4 " + data("all.txt")).code, 2);
  EXPECT_EQ(run("nosuchcommand").code, 2);
  EXPECT_EQ(run("--format xml enumerate C3").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, JsonCarriesTheTextContent) {
  for (const std::string args : {"scheme C2xC16 " + data("k5-highest.txt"), std::string("catalogue 2 6 4"),
                                 std::string("enumerate C2xC2")}) {
    auto text = run(args).out;
    auto j = json::parse(run("--format json " + args).out);
    std::vector<json> rings;
    if (j.contains("srings"))
      for (auto& s : j["srings"]) rings.push_back(s);
    else if (j.contains("sring"))
      rings.push_back(j["sring"]);
    else
      rings.push_back(j);
    for (auto& s : rings) {
      auto g = AbelianGroup::parse(s["group"].get<std::string>());
      std::vector<ElemSet> classes;
      for (auto& c : s["classes"]) {
        ElemSet cls;
        for (auto& e : c) cls.push_back(g.parse_element(e.get<std::string>()));
        classes.push_back(cls);
      }
      auto a = SRing::validate(g, classes);
      EXPECT_EQ(a.rank(), s["rank"].get<std::size_t>());
      EXPECT_NE(text.find(to_text(a)), std::string::npos) << args;
    }
  }
  auto text = run("iso C2xC8 " + data("c2c8_x.txt") + " C2xC8 " + data("c2c8_y.txt")).out;
  auto j = json::parse(run("--format json iso C2xC8 " + data("c2c8_x.txt") + " C2xC8 " + data("c2c8_y.txt")).out);
  EXPECT_EQ(j["verdict"], "iso");
  for (auto& pr : j["certificate"]["map"])
    EXPECT_NE(text.find(pr[0].get<std::string>() + " -> " + pr[1].get<std::string>() + "\n"), std::string::npos);
  auto sj = json::parse(run("--format json separability --index 0 C2xC2").out);
  auto st = run("separability --index 0 C2xC2").out;
  for (auto& l : sj["sources"][0]["lines"]) {
    std::ostringstream want;
    want << "A=" << l["A"].get<std::size_t>() << " G'=" << l["G'"].get<std::string>() << " phi=" << l["phi"].get<std::size_t>()
         << " verdict=" << l["verdict"].get<std::string>() << " method=" << l["method"].get<std::string>();
    EXPECT_NE(st.find(want.str()), std::string::npos) << want.str();
  }
}

TEST(Cli, Deterministic) {
  for (const std::string args : {std::string("separability --sample 5 --seed 9 C2xC4"), std::string("enumerate C3xC3"),
                                 "--format json aut C5 " + data("pentagon.txt")}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args;
  }
  EXPECT_NE(run("separability --sample 5 --seed 9 C2xC4").out, run("separability --sample 5 --seed 10 C2xC4").out);
}
