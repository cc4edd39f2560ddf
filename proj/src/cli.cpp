#include "bruhat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "bruhat/kgp.hpp"

namespace bruhat::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  bool adjoint = false;
  std::string twist = "id";
  std::optional<std::string> parabolic;
  std::string kgb, fixture, group, graph;
  std::vector<std::string> words;
  std::string file;
  bool twisted = false;
  std::string write_dir;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DatumPtr datum_of(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  Isogeny iso = o.adjoint ? Isogeny::Adjoint : Isogeny::SimplyConnected;
  std::vector<int> tw;
  if (o.twist == "flip") {
    tw = flip_twist(cartan_of_type(o.type));
  } else if (o.twist != "id") {
    auto rank = cartan_of_type(o.type).rank();
    for (int i : parse_word(o.twist, rank)) tw.push_back(i);
  }
  return RootDatum::of_type(o.type, iso, tw);
}

ParabolicSubset subset_of(const Options& o, int rank) {
  if (!o.parabolic) return {};
  return ParabolicSubset::of(parse_word(*o.parabolic, rank));
}

KgbGraph fixture_named(const std::string& name) {
  for (auto& [n, g] : builtin_fixtures())
    if (n == name) return g;
  throw UsageError("unknown fixture '" + name + "'");
}

// --kgb FILE, --fixture NAME or --group TYPE; exactly one.
KgbGraph kgb_of(const Options& o) {
  int given = !o.kgb.empty() + !o.fixture.empty() + !o.group.empty();
  if (given != 1) throw UsageError("give exactly one of --kgb, --fixture, --group");
  if (!o.kgb.empty()) return load_kgb(read_file(o.kgb));
  if (!o.fixture.empty()) return fixture_named(o.fixture);
  return group_case(RootDatum::of_type(o.group));
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  auto d = datum_of(o);
  auto elems = o.twisted ? twisted_involutions(d) : enumerate(d);
  for (std::size_t k = 0; k < elems.size(); ++k)
    out << k << " " << elems[k].to_string() << " len=" << elems[k].length() << "\n";
  return 0;
}

int cmd_order(const Options& o, std::ostream& out) {
  if (o.words.size() != 2) throw UsageError("order needs two words");
  auto d = datum_of(o);
  auto u = WeylElt::from_word(d, parse_word(o.words[0], d->rank()));
  auto v = WeylElt::from_word(d, parse_word(o.words[1], d->rank()));
  bool le, ge;
  if (o.parabolic) {
    auto I = subset_of(o, d->rank());
    auto cu = coset_of(u, I), cv = coset_of(v, I);
    le = coset_bruhat_leq(cu, cv);
    ge = coset_bruhat_leq(cv, cu);
  } else {
    le = bruhat_leq(u, v);
    ge = bruhat_leq(v, u);
  }
  out << (le && ge ? "equal" : le ? "leq" : ge ? "geq" : "incomparable") << "\n";
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  if (o.words.size() != 1) throw UsageError("reduce needs one word");
  auto d = datum_of(o);
  auto w = WeylElt::from_word(d, parse_word(o.words[0], d->rank()));
  out << w.to_string() << " len=" << w.length() << "\n";
  return 0;
}

int cmd_cosets(const Options& o, std::ostream& out) {
  auto d = datum_of(o);
  auto cs = enumerate_cosets(d, subset_of(o, d->rank()));
  for (std::size_t k = 0; k < cs.size(); ++k)
    out << "coset " << k << ": min=" << cs[k].min_rep.to_string() << " max=" << cs[k].max_rep.to_string()
        << " plen=" << cs[k].plen() << "\n";
  return 0;
}

int cmd_classes(const Options& o, std::ostream& out) {
  auto g = kgb_of(o);
  auto cs = i_equivalence_classes(g, subset_of(o, g.rank()));
  for (std::size_t k = 0; k < cs.size(); ++k)
    out << "class " << k << ": top=" << cs[k].top << " members=" << join(cs[k].members) << "\n";
  return 0;
}

int cmd_kgp_order(const Options& o, std::ostream& out) {
  auto g = kgb_of(o);
  for (auto [a, b] : kgp_hasse(g, subset_of(o, g.rank()))) out << a << " -> " << b << "\n";
  return 0;
}

int report(int nodes, Violations all, std::ostream& out, std::ostream& err) {
  normalize(all);
  for (const auto& v : all) out << "violation: " << v.to_string() << "\n";
  if (all.empty()) {
    out << "ok: " << nodes << " nodes, 0 violations\n";
    return 0;
  }
  out << "fail: " << nodes << " nodes, " << all.size() << " violations\n";
  err << "error: AxiomViolation: " << all.front().axiom << "\n";
  return 1;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  std::string path = o.graph.empty() ? o.file : o.graph;
  if (!path.empty() && (!o.kgb.empty() || !o.fixture.empty() || !o.group.empty()))
    throw UsageError("give a file or a graph option, not both");
  std::string text = path.empty() ? std::string() : read_file(path);
  if (!o.graph.empty() || text.rfind("orbitgraph", 0) == 0) {
    auto g = OrbitGraph::from_text(text);
    Violations all = g.validate();
    if (all.empty()) all = g.property_z_check();
    return report(g.size(), all, out, err);
  }
  KgbGraph g = path.empty() ? kgb_of(o) : parse_kgb(text);
  Violations all = g.validate();
  // The remaining checkers assume a valid graph.
  if (all.empty()) {
    for (auto& v : to_orbit_poset(g).property_z_check()) all.push_back(v);
    for (auto& v : ascent_consistency_check(g)) all.push_back(v);
    for (auto& v : minimal_w_uniqueness_check(g)) all.push_back(v);
  }
  return report(g.size(), all, out, err);
}

int cmd_hasse(const Options& o, std::ostream& out) {
  if (!o.graph.empty()) {
    out << OrbitGraph::from_text(read_file(o.graph)).hasse_dot();
  } else if (!o.type.empty()) {
    auto d = datum_of(o);
    out << (o.parabolic ? from_parabolic(d, subset_of(o, d->rank())) : from_weyl(d)).hasse_dot();
  } else {
    out << to_orbit_poset(kgb_of(o)).hasse_dot();
  }
  return 0;
}

int cmd_fixtures(const Options& o, std::ostream& out) {
  for (const auto& [name, g] : builtin_fixtures()) {
    if (o.write_dir.empty()) {
      out << name << " " << g.size() << " nodes\n";
      continue;
    }
    auto path = std::filesystem::path(o.write_dir) / (name + ".kgb");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path.string());
    f << save_kgb(g);
    out << "wrote " << path.string() << "\n";
  }
  return 0;
}

}  // namespace

std::vector<std::pair<std::string, KgbGraph>> builtin_fixtures() {
  return {
      {"sl2_split", fixtures::sl2_split()},
      {"pgl2_split", fixtures::pgl2_split()},
      {"a1xa1_swap", fixtures::a1xa1_swap()},
      {"group_a1", group_case(RootDatum::of_type("A1"))},
      {"group_a2", group_case(RootDatum::of_type("A2"))},
      {"group_b2", group_case(RootDatum::of_type("B2"))},
  };
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bruhat order on orbit posets of flag varieties", "bruhat"};
  app.require_subcommand(1);
  Options o;

  auto datum_opts = [&](CLI::App* c) {
    c->add_option("--type", o.type, "built-in type such as A2, B3, A1xA1");
    c->add_flag("--adjoint", o.adjoint, "adjoint isogeny instead of simply connected");
    c->add_option("--twist", o.twist, "id, flip, or a 1-based permutation like 2,1");
  };
  auto parabolic_opt = [&](CLI::App* c) {
    c->add_option("--parabolic", o.parabolic, "simple roots in I, 1-based, comma separated");
  };
  auto kgb_opts = [&](CLI::App* c) {
    c->add_option("--kgb", o.kgb, "kgbgraph v1 file");
    c->add_option("--fixture", o.fixture, "built-in fixture name");
    c->add_option("--group", o.group, "group case of a built-in type");
  };

  auto* en = app.add_subcommand("enumerate", "list W, or its twisted involutions");
  datum_opts(en);
  en->add_flag("--twisted", o.twisted, "only twisted involutions");
  auto* ord = app.add_subcommand("order", "compare two elements (or their cosets)");
  datum_opts(ord);
  parabolic_opt(ord);
  ord->add_option("words", o.words, "two comma-separated words")->expected(2);
  auto* red = app.add_subcommand("reduce", "lex-smallest reduced word");
  datum_opts(red);
  red->add_option("word", o.words, "comma-separated word")->expected(1);
  auto* cos = app.add_subcommand("cosets", "cosets of W_L");
  datum_opts(cos);
  parabolic_opt(cos);
  auto* cls = app.add_subcommand("classes", "I-equivalence classes of a KGB graph");
  kgb_opts(cls);
  parabolic_opt(cls);
  auto* kgpo = app.add_subcommand("kgp-order", "Hasse edges of the class poset");
  kgb_opts(kgpo);
  parabolic_opt(kgpo);
  auto* val = app.add_subcommand("validate", "run every checker on a graph");
  val->add_option("file", o.file, "kgbgraph v1 or orbitgraph v1 file");
  kgb_opts(val);
  val->add_option("--graph", o.graph, "orbitgraph v1 file");
  auto* has = app.add_subcommand("hasse", "Hasse diagram in dot syntax");
  datum_opts(has);
  parabolic_opt(has);
  kgb_opts(has);
  has->add_option("--graph", o.graph, "orbitgraph v1 file");
  auto* fix = app.add_subcommand("fixtures", "list or write the built-in fixtures");
  fix->add_option("--write", o.write_dir, "directory to write <name>.kgb files into");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (en->parsed()) return cmd_enumerate(o, out);
    if (ord->parsed()) return cmd_order(o, out);
    if (red->parsed()) return cmd_reduce(o, out);
    if (cos->parsed()) return cmd_cosets(o, out);
    if (cls->parsed()) return cmd_classes(o, out);
    if (kgpo->parsed()) return cmd_kgp_order(o, out);
    if (val->parsed()) return cmd_validate(o, out, err);
    if (has->parsed()) return cmd_hasse(o, out);
    if (fix->parsed()) return cmd_fixtures(o, out);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), '\n', ' ');
    err << "error: " << to_string(e.kind()) << ": " << what << "\n";
    return 1;
  }
  return 2;
}

}  // namespace bruhat::cli
