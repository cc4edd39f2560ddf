#include "bruhat/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bruhat/kgp.hpp"
#include "doctest.h"

using namespace bruhat;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string source_path(const std::string& rel) { return std::string(BRUHAT_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

// Outcome of the exhaustive descent counterexample search, one line per (graph, I).
std::string descent_search_report() {
  std::ostringstream os;
  std::vector<std::pair<std::string, KgbGraph>> graphs = cli::builtin_fixtures();
  for (const char* t : {"A2", "B2", "G2"})
    graphs.emplace_back(std::string("shadow_") + t, twisted_involution_shadow(RootDatum::of_type(t)));
  for (const auto& [name, g] : graphs)
    for (auto S : all_parabolic_subsets(g.rank())) {
      auto w = find_descent_counterexample(g, S);
      os << name << " I=" << to_string(S) << " ";
      if (w)
        os << "v=" << w->v << " u=" << w->u << " w=" << format_word(w->w) << " alpha=" << w->alpha + 1 << "\n";
      else
        os << "none\n";
    }
  return os.str();
}

}  // namespace

TEST_CASE("cli order and reduce") {
  auto r = run({"order", "--type", "A2", "1,2", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "incomparable\n");
  CHECK(run({"order", "--type", "A2", "", "1,2,1"}).out == "leq\n");
  CHECK(run({"order", "--type", "A2", "1,2,1", "2"}).out == "geq\n");
  CHECK(run({"order", "--type", "A2", "1,2,1", "2,1,2"}).out == "equal\n");
  CHECK(run({"order", "--type", "A2", "--parabolic", "1", "1", ""}).out == "equal\n");
  CHECK(run({"reduce", "--type", "A2", "2,1,2,1"}).out == "1,2 len=2\n");
  auto bad = run({"order", "--type", "A2", "3", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("error: ParseError", 0) == 0);
}

TEST_CASE("cli enumerate and cosets") {
  auto r = run({"enumerate", "--type", "B2"});
  CHECK(count(r.out, "\n") == 8);
  CHECK(r.out.rfind("0 e len=0\n", 0) == 0);
  CHECK(count(run({"enumerate", "--type", "A2", "--twisted"}).out, "\n") == 4);
  CHECK(count(run({"cosets", "--type", "A3", "--parabolic", "1,3"}).out, "coset ") == 6);
  CHECK(run({"enumerate", "--type", "B2", "--twist", "flip"}).code == 1);
}

TEST_CASE("cli hasse") {
  auto a1 = run({"hasse", "--type", "A1"});
  CHECK(count(a1.out, "len=") == 2);
  CHECK(count(a1.out, "->") == 1);
  auto a2 = run({"hasse", "--type", "A2"});
  CHECK(count(a2.out, "len=") == 6);
  CHECK(count(a2.out, "->") == 8);
  CHECK(a2.out == run({"hasse", "--type", "A2"}).out);
  auto sl = run({"hasse", "--kgb", source_path("fixtures/sl2_split.kgb")});
  CHECK(sl.code == 0);
  CHECK(count(sl.out, "len=") == 3);
  CHECK(sl.out.find("  0 -> 2;\n  1 -> 2;\n") != std::string::npos);
  CHECK(count(run({"hasse", "--type", "A2", "--parabolic", "1"}).out, "->") == 2);
}

TEST_CASE("cli classes and kgp-order") {
  auto r = run({"classes", "--fixture", "sl2_split", "--parabolic", "1"});
  CHECK(r.out == "class 0: top=2 members=0,1,2\n");
  auto g = run({"classes", "--group", "A2", "--parabolic", "1"});
  CHECK(count(g.out, "class ") == 3);
  CHECK(run({"kgp-order", "--group", "A2", "--parabolic", "1"}).out == "0 -> 1\n1 -> 2\n");
}

TEST_CASE("cli validate exit codes") {
  auto ok = run({"validate", source_path("fixtures/sl2_split.kgb")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "ok: 3 nodes, 0 violations\n");
  CHECK(run({"validate", source_path("fixtures/pgl2_split.kgb")}).code == 0);

  auto tmp = std::filesystem::temp_directory_path() / "bruhat_cli_type_one.kgb";
  std::string text = slurp(source_path("fixtures/pgl2_split.kgb"));
  text.replace(text.find("nci2"), 4, "nci1");
  std::ofstream(tmp) << text;
  auto bad = run({"validate", tmp.string()});
  CHECK(bad.code == 1);
  CHECK(bad.err == "error: AxiomViolation: NoncompactIPattern\n");
  CHECK(bad.out.find("TypeIWithTrivialM") != std::string::npos);
  std::filesystem::remove(tmp);

  // both copies of s_1 carry e to s_1
  auto group = run({"validate", "--fixture", "a1xa1_swap"});
  CHECK(group.code == 1);
  CHECK(group.err == "error: AxiomViolation: MinimalWUniqueness\n");

  CHECK(run({"validate"}).code == 2);
  CHECK(run({"validate", "/nonexistent/x.kgb"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"order", "--type", "A2", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  auto og = std::filesystem::temp_directory_path() / "bruhat_cli_graph.txt";
  std::ofstream(og) << from_parabolic(RootDatum::of_type("B2"), ParabolicSubset::of({0})).to_text();
  CHECK(run({"validate", og.string()}).out == "ok: 4 nodes, 0 violations\n");
  std::filesystem::remove(og);
}

TEST_CASE("shipped fixture files match the built-in fixtures") {
  for (const auto& [name, g] : cli::builtin_fixtures()) {
    auto path = source_path("fixtures/" + name + ".kgb");
    auto text = slurp(path);
    CHECK_MESSAGE(text == save_kgb(g), path);
    CHECK(load_kgb(text) == g);
  }
  auto listing = run({"fixtures"});
  CHECK(listing.out.find("sl2_split 3 nodes\n") == 0);
}

TEST_CASE("descent counterexample search artifact") {
  auto report = descent_search_report();
  auto path = source_path("tests/golden/descent_search.txt");
  if (std::getenv("BRUHAT_UPDATE_GOLDEN")) std::ofstream(path, std::ios::binary) << report;
  CHECK(report == slurp(path));
}
