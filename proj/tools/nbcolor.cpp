// nbcolor: command-line front end.
//
// Exit codes: 0 success / all pass, 1 contradiction or invalid coloring,
// 2 input error, 3 timeout only.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nbcolor/closure.hpp"
#include "nbcolor/construct.hpp"
#include "nbcolor/exact.hpp"
#include "nbcolor/gadgets.hpp"
#include "nbcolor/generators.hpp"
#include "nbcolor/io.hpp"
#include "nbcolor/repro.hpp"

using namespace nbcolor;

namespace {

constexpr int kOk = 0, kFail = 1, kInputError = 2, kTimeout = 3;

struct Globals {
  std::uint64_t seed = 1;
  double time_budget = 60;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  out << text;
}

// A rotation file is recognized by its "v: ..." lines.
bool looks_like_rotation(const std::string& text) {
  for (const auto& line : detail::content_lines(text))
    if (line.find(':') != std::string::npos) return true;
  return false;
}

struct Instance {
  Graph graph;
  std::optional<PlaneEmbedding> embedding;
};

Instance load(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_rotation(text)) {
    auto e = parse_embedding(text);
    return {e.graph(), e};
  }
  return {parse_graph(text), std::nullopt};
}

PlaneEmbedding require_embedding(const Instance& inst, const std::string& what) {
  if (!inst.embedding) throw Error(ErrorCode::MissingEmbedding, what + " needs a rotation-system file");
  return *inst.embedding;
}

struct VariantFlags {
  std::string name;
  bool proper = false, improper = false, cf = false, um = false, open = false, closed = false, facial = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--variant", name, "Variant name such as pCFo, iUMc, pUMf");
    cmd->add_flag("--proper", proper);
    cmd->add_flag("--improper", improper);
    cmd->add_flag("--cf", cf);
    cmd->add_flag("--um", um);
    cmd->add_flag("--open", open);
    cmd->add_flag("--closed", closed);
    cmd->add_flag("--facial", facial);
  }

  VariantSpec resolve() const {
    if (!name.empty()) {
      auto v = parse_variant(name);
      if (!v) throw Error(ErrorCode::MalformedInput, "unknown variant '" + name + "'");
      return *v;
    }
    if (proper + improper > 1 || cf + um > 1 || open + closed + facial > 1)
      throw Error(ErrorCode::MalformedInput, "conflicting variant flags");
    if (!(proper || improper) || !(cf || um) || !(open || closed || facial))
      throw Error(ErrorCode::MalformedInput, "give --variant or one flag from each of the three groups");
    VariantSpec v;
    v.properness = proper ? Properness::Proper : Properness::Improper;
    v.rule = cf ? Rule::ConflictFree : Rule::UniqueMaximum;
    v.scope = open ? Scope::Open : closed ? Scope::Closed : Scope::Facial;
    if (facial && improper) throw Error(ErrorCode::MalformedInput, "facial variants are proper");
    return v;
  }
};

SolveOptions solve_options(const Globals& g) {
  SolveOptions o;
  if (g.time_budget > 0) o.time_budget = std::chrono::duration<double>(g.time_budget);
  else o.time_budget.reset();
  return o;
}

void print_coloring(const Graph& g, const Coloring& c, const Globals& globals) {
  if (globals.format == "dot")
    std::cout << to_dot(g, &c);
  else if (globals.format == "csv") {
    std::cout << "vertex,color\n";
    for (Vertex v = 0; v < c.size(); ++v) std::cout << v + 1 << ',' << c[v] << '\n';
  } else
    std::cout << serialize_coloring(c);
}

int cmd_check(const std::string& graph_path, const std::string& coloring_path, const VariantFlags& vf) {
  Instance inst = load(graph_path);
  const VariantSpec spec = vf.resolve();
  Coloring c = parse_coloring(read_file(coloring_path), inst.graph.vertex_count());
  CheckResult r = spec.scope == Scope::Facial ? check(require_embedding(inst, "facial check"), c, spec)
                                              : check(inst.graph, c, spec);
  if (!r) {
    std::cout << "ok " << spec.name() << " colors=" << c.distinct_colors() << '\n';
    return kOk;
  }
  std::cout << "violation " << spec.name() << ' ' << (r->on_face ? "face " : "vertex ") << r->id + 1 << ' '
            << to_string(r->reason) << '\n';
  return kFail;
}

int cmd_chromatic(const std::string& path, const VariantFlags& vf, int max_colors, const std::string& witness_path,
                  unsigned workers, const Globals& globals) {
  Instance inst = load(path);
  const VariantSpec spec = vf.resolve();
  ChromaticOptions opts{max_colors, solve_options(globals)};
  opts.solve.workers = workers;
  SolveResult r = spec.scope == Scope::Facial ? chromatic_number(require_embedding(inst, "facial variants"), spec, opts)
                                              : chromatic_number(inst.graph, spec, opts);
  if (globals.format == "csv")
    std::cout << "variant,value,status,lower_bound\n"
              << spec.name() << ',' << (r.value ? std::to_string(*r.value) : "") << ',' << to_string(r.status) << ','
              << r.lower_bound << '\n';
  else
    std::cout << spec.name() << " value=" << (r.value ? std::to_string(*r.value) : "?")
              << " status=" << to_string(r.status) << " lower_bound=" << r.lower_bound << '\n';
  if (r.witness) {
    if (!witness_path.empty()) write_file(witness_path, serialize_coloring(*r.witness));
    else if (globals.format != "csv") std::cout << serialize_coloring(*r.witness);
  }
  return r.status == SolveStatus::Timeout ? kTimeout : kOk;
}

int cmd_construct(const std::string& path, const std::string& algorithm, const std::string& output,
                  const Globals& globals) {
  Instance inst = load(path);
  const SolveOptions opts = solve_options(globals);
  Coloring c;
  std::optional<VariantSpec> target;
  int bound = 0;
  auto emb = [&] { return require_embedding(inst, algorithm); };
  if (algorithm == "iumc6") c = color_iumc(emb(), opts), target = variant::iUMc, bound = 6;
  else if (algorithm == "pcfo8") c = color_pcfo(emb(), opts), target = variant::pCFo, bound = 8;
  else if (algorithm == "pumo10") c = color_pumo(emb(), opts), target = variant::pUMo, bound = 10;
  else if (algorithm == "pumc8") c = color_pumc(emb(), opts), target = variant::pUMc, bound = 8;
  else if (algorithm == "outerplanar-pumo5") c = color_pumo_outerplanar(inst.graph), target = variant::pUMo, bound = 5;
  else if (algorithm == "greedy") c = greedy_first_fit(inst.graph), bound = static_cast<int>(inst.graph.max_degree()) + 1;
  else if (algorithm == "facial-cf") c = facial_cf_coloring(emb(), std::nullopt, {1, 4}, opts), target = variant::facialCF, bound = 4;
  else if (algorithm == "facial-um") c = facial_um_coloring(emb(), {1, 5}, opts), target = variant::facialUM, bound = 5;
  else throw Error(ErrorCode::MalformedInput, "unknown algorithm '" + algorithm + "'");

  bool valid = true;
  if (target)
    valid = target->scope == Scope::Facial ? is_valid(*inst.embedding, c, *target) : is_valid(inst.graph, c, *target);
  else
    valid = is_valid(inst.graph, c, variant::pCFc);  // greedy: proper
  if (!output.empty()) write_file(output, serialize_coloring(c));
  else print_coloring(inst.graph, c, globals);
  std::cerr << algorithm << ": " << (target ? target->name() : std::string("proper")) << ' '
            << (valid ? "valid" : "INVALID") << ", colors used " << c.max_color() << " (bound " << bound << ")\n";
  return valid && c.max_color() <= bound ? kOk : kFail;
}

std::vector<Vertex> parse_vertex_list(const std::string& list, std::size_t n) {
  std::vector<Vertex> out;
  std::string s = list;
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  for (long long x : detail::integers(s)) {
    if (x < 1 || static_cast<std::size_t>(x) > n)
      throw Error(ErrorCode::XNotSubset, "vertex " + std::to_string(x) + " is not in the graph");
    out.push_back(static_cast<Vertex>(x - 1));
  }
  return out;
}

int cmd_closure(const std::string& path, const std::string& xs, const std::string& rotation_out) {
  PlaneEmbedding e = parse_embedding(read_file(path));
  auto X = parse_vertex_list(xs, e.vertex_count());
  ClosureResult r = facial_closure(e, X);
  std::cout << "# closure vertex i corresponds to input vertex:";
  for (Vertex p : r.to_parent) std::cout << ' ' << p + 1;
  std::cout << '\n' << serialize_graph(r.graph);
  for (const auto& cs : r.constraint_sets) {
    std::cout << "# constraint " << cs.x + 1 << ':';
    for (Vertex m : cs.members) std::cout << ' ' << m + 1;
    std::cout << '\n';
  }
  std::cout << "# added edges " << r.added_edges.size() << '\n';
  if (r.derived_embedding) {
    if (!rotation_out.empty()) write_file(rotation_out, serialize_embedding(*r.derived_embedding));
  } else {
    std::cout << "# no derived embedding: " << r.diagnostic << '\n';
  }
  return kOk;
}

int cmd_gadget(const std::string& name, bool rotation, bool claims, const Globals& globals) {
  Gadget g = generate(name);
  if (claims) {
    for (const auto& c : claimed_values(name))
      std::cout << "# " << c.variant.name() << (c.relation == Relation::Equal ? " = " : " <= ") << c.value << "  ("
                << c.claim << ")\n";
  }
  if (globals.format == "dot")
    std::cout << to_dot(g.graph, nullptr, &g.labels);
  else if (rotation)
    std::cout << serialize_embedding(*g.embedding);
  else {
    for (Vertex v = 0; v < g.labels.size(); ++v) std::cout << "# " << v + 1 << ' ' << g.labels[v] << '\n';
    std::cout << serialize_graph(g.graph);
  }
  return kOk;
}

int cmd_faces(const std::string& path, const Globals& globals) {
  PlaneEmbedding e = parse_embedding(read_file(path));
  const auto& faces = e.faces();
  if (globals.format == "csv") std::cout << "face,size,vertices\n";
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (globals.format == "csv") {
      std::cout << f + 1 << ',' << faces[f].walk.size() << ',';
      for (std::size_t i = 0; i < faces[f].vertices.size(); ++i) std::cout << (i ? " " : "") << faces[f].vertices[i] + 1;
      std::cout << '\n';
      continue;
    }
    std::cout << "face " << f + 1 << ":";
    for (auto [u, v] : faces[f].walk) std::cout << ' ' << u + 1;
    if (faces[f].walk.empty()) std::cout << ' ' << faces[f].vertices[0] + 1;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_random(const std::string& kind, std::size_t n, double thin, double p, const Globals& globals) {
  if (kind == "planar") {
    auto e = random_planar(n, globals.seed, thin);
    std::cout << (globals.format == "dot" ? to_dot(e.graph()) : serialize_embedding(e));
  } else if (kind == "outerplanar") {
    auto g = random_outerplanar(n, globals.seed, thin);
    std::cout << (globals.format == "dot" ? to_dot(g) : serialize_graph(g));
  } else if (kind == "graph") {
    auto g = random_graph(n, p, globals.seed);
    std::cout << (globals.format == "dot" ? to_dot(g) : serialize_graph(g));
  } else {
    throw Error(ErrorCode::MalformedInput, "kind must be planar, outerplanar or graph");
  }
  return kOk;
}

int cmd_reproduce(const std::string& tier, const Globals& globals) {
  if (tier != "quick" && tier != "full") throw Error(ErrorCode::MalformedInput, "tier must be quick or full");
  auto report = reproduce(tier == "full" ? Tier::Full : Tier::Quick, [](const ReproRow& r) {
    std::cerr << "[" << to_string(r.status) << "] " << r.claim << " / " << r.instance << " (" << r.seconds << " s)\n";
  });
  std::cout << (globals.format == "csv" ? report.to_csv() : report.to_text());
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neighborhood coloring variants of planar graphs: checkers, exact solver, constructions"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for random instances")->capture_default_str();
  app.add_option("--time-budget", globals.time_budget, "Seconds per exact query (0 = unlimited)")->capture_default_str();
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "dot"}))
      ->capture_default_str();

  std::function<int()> run;

  std::string graph_path, coloring_path, output, algorithm = "greedy", xs, rotation_out, name, kind = "planar",
                                                 tier = "quick";
  int max_colors = 32;
  unsigned workers = 1;
  std::size_t n = 10;
  double thin = 0.0, p = 0.5;
  bool rotation = false, claims = false;
  VariantFlags check_flags, chrom_flags;

  auto* check_cmd = app.add_subcommand("check", "Validate a coloring for a variant");
  check_cmd->add_option("graph", graph_path, "Edge-list or rotation file")->required();
  check_cmd->add_option("coloring", coloring_path, "Coloring file")->required();
  check_flags.add(check_cmd);
  check_cmd->callback([&] { run = [&] { return cmd_check(graph_path, coloring_path, check_flags); }; });

  auto* chrom = app.add_subcommand("chromatic", "Exact chromatic number for a variant");
  chrom->add_option("graph", graph_path, "Edge-list or rotation file")->required();
  chrom_flags.add(chrom);
  chrom->add_option("--max-colors", max_colors)->capture_default_str();
  chrom->add_option("--witness", output, "Write the witness coloring here");
  chrom->add_option("--workers", workers, "Parallel workers for unique-maximum searches")->capture_default_str();
  chrom->callback([&] { run = [&] { return cmd_chromatic(graph_path, chrom_flags, max_colors, output, workers, globals); }; });

  auto* cons = app.add_subcommand("construct", "Run a constructive coloring algorithm");
  cons->add_option("graph", graph_path, "Rotation file (edge list suffices for outerplanar-pumo5, greedy)")->required();
  cons->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"iumc6", "pcfo8", "pumo10", "pumc8", "outerplanar-pumo5", "greedy", "facial-cf", "facial-um"}))
      ->capture_default_str();
  cons->add_option("--output", output, "Write the coloring here");
  cons->callback([&] { run = [&] { return cmd_construct(graph_path, algorithm, output, globals); }; });

  auto* clo = app.add_subcommand("closure", "Facial closure of a plane graph");
  clo->add_option("rotation", graph_path, "Rotation file")->required();
  clo->add_option("--x", xs, "Removed vertices, e.g. 1,4,7")->required();
  clo->add_option("--rotation-out", rotation_out, "Write the derived closure rotation here");
  clo->callback([&] { run = [&] { return cmd_closure(graph_path, xs, rotation_out); }; });

  auto* gad = app.add_subcommand("gadget", "Print a named gadget");
  gad->add_option("name", name, "G3, G3prime, O_iUMo, H_iUMo, H_pCFo, fritsch, O_pUMc, H_pUMo, C_n(k)")->required();
  gad->add_flag("--rotation", rotation, "Print the rotation system instead of the edge list");
  gad->add_flag("--claims", claims, "Print the claimed values");
  gad->callback([&] { run = [&] { return cmd_gadget(name, rotation, claims, globals); }; });

  auto* fac = app.add_subcommand("faces", "Trace the faces of a rotation system");
  fac->add_option("rotation", graph_path, "Rotation file")->required();
  fac->callback([&] { run = [&] { return cmd_faces(graph_path, globals); }; });

  auto* rnd = app.add_subcommand("random", "Random instance");
  rnd->add_option("kind", kind, "planar, outerplanar or graph")->capture_default_str();
  rnd->add_option("--n", n)->capture_default_str();
  rnd->add_option("--thin", thin, "Fraction of edges to try deleting")->capture_default_str();
  rnd->add_option("--p", p, "Edge probability for kind=graph")->capture_default_str();
  rnd->callback([&] { run = [&] { return cmd_random(kind, n, thin, p, globals); }; });

  auto* rep = app.add_subcommand("reproduce", "Reproduce all claims");
  rep->add_option("--tier", tier)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  rep->callback([&] { run = [&] { return cmd_reproduce(tier, globals); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::Timeout) return kTimeout;
    if (e.code() == ErrorCode::BoundViolated) return kFail;
    return kInputError;
  }
}
