#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#ifdef IVDG_VENDORED_JSON
#include <json.hpp>
#else
#include <nlohmann/json.hpp>
#endif

#include "ivdg/certificate.hpp"
#include "ivdg/domination.hpp"
#include "ivdg/error.hpp"
#include "ivdg/generate.hpp"
#include "ivdg/independent_set.hpp"
#include "ivdg/interval.hpp"
#include "ivdg/io.hpp"
#include "ivdg/kernel.hpp"
#include "ivdg/oracle.hpp"
#include "ivdg/ordering.hpp"
#include "ivdg/point_point.hpp"

namespace ivdg::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kSolved = 0;
constexpr int kError = 1;
constexpr int kNone = 2;

struct Options {
  std::vector<std::string> files;
  std::string problem;
  std::string kind;
  std::string mode;
  std::string objective = "min";
  std::string weights_file;
  std::string out_file;
  std::optional<int> budget_n;
  std::uint64_t seed = 1;
  bool adjusted = false;
  bool as_json = false;
  bool batch = false;
  int k = 2;
  int n = 10;
  int a = 5;
  int b = 5;
  int grid = 20;
  int span = 0;
  int trials = 100;
  double p = 0.3;
  double loop_p = 0.0;
};

struct Report {
  json body;
  int code = kSolved;
};

// Raw text output (generated files, representations) bypasses JSON.
struct Text {
  std::string text;
};

using Result = std::variant<Report, Text>;

const std::string& file(const Options& o, std::size_t i, const char* what) {
  if (o.files.size() <= i) throw Error(std::string("missing ") + what + " file");
  return o.files[i];
}

io::Instance instance(const Options& o, std::size_t i = 0) {
  return io::parse_instance(io::read_file(file(o, i, "instance")));
}

Digraph digraph_of(const io::Instance& inst) {
  if (auto* g = std::get_if<Digraph>(&inst)) return *g;
  if (auto* rep = std::get_if<IntervalRep>(&inst)) return realize_digraph(*rep);
  throw Error("expected a digraph or an interval representation");
}

const IntervalRep& rep_of(const io::Instance& inst) {
  if (auto* rep = std::get_if<IntervalRep>(&inst)) return *rep;
  throw Error("expected an interval representation");
}

Ordering ordering(const Options& o, std::size_t i) {
  return io::parse_ordering(io::read_file(file(o, i, "ordering")));
}

std::vector<Weight> weights(const Options& o) {
  if (o.weights_file.empty()) return {};
  return io::parse_weights(io::read_file(o.weights_file));
}

Objective objective(const Options& o) {
  if (o.objective == "min") return Objective::min;
  if (o.objective == "max") return Objective::max;
  throw Error("--objective must be min or max");
}

SetMode set_mode(const Options& o) {
  auto m = parse_set_mode(o.mode);
  if (!m) throw Error("unknown --mode '" + o.mode + "'");
  return *m;
}

oracle::OracleBudget budget(const Options& o) {
  oracle::OracleBudget b;
  if (o.budget_n) b.subset_n = b.permutation_n = b.k33_n = *o.budget_n;
  return b;
}

json witness_json(const StructureWitness& w) {
  std::vector<Vertex> vs;
  for (Vertex v : w.vertices) {
    if (v >= 0) vs.push_back(v);
  }
  return {{"kind", std::string(to_string(w.kind))}, {"vertices", vs}};
}

json anti_walk_json(const AntiWalkWitness& w) {
  return {{"a", w.a}, {"b", w.b}, {"c", w.c}, {"d", w.d}};
}

// Re-verifies `cert` on g for `mode` and renders it; a failed check is an error.
Report solved(const Digraph& g, Certificate cert, SetMode mode, std::span<const Weight> w = {}) {
  certify(g, cert, mode);
  if (!cert.all_checks_pass()) {
    throw Error("internal error: " + cert.provenance.algorithm + " produced an invalid " +
                std::string(to_string(mode)));
  }
  json body = {{"set", cert.set}, {"size", cert.size()}};
  if (!w.empty()) {
    Weight total = 0;
    for (Vertex v : cert.set) total += w[static_cast<std::size_t>(v)];
    body["weight"] = total;
  }
  body["certificate_checked"] = true;
  return {body, kSolved};
}

Report none(const char* status) { return {{{"status", status}}, kNone}; }

// Covers every A-vertex with a chosen B-vertex.
bool dominates_a(const IntervalBigraphRep& rep, const std::vector<Vertex>& chosen) {
  for (int i = 0; i < rep.a_size(); ++i) {
    if (std::none_of(chosen.begin(), chosen.end(), [&](Vertex j) { return rep.adjacent(i, j); })) {
      return false;
    }
  }
  return true;
}

Report red_blue_report(const IntervalBigraphRep& rep, std::optional<Certificate> cert) {
  if (!cert) return none("no-dominating-set");
  if (!dominates_a(rep, cert->set)) throw Error("internal error: red-blue set does not dominate A");
  return {{{"set", cert->set}, {"size", cert->size()}, {"certificate_checked", true}}, kSolved};
}

Result cmd_kernel(const Options& o) {
  auto inst = instance(o);
  const IntervalRep& rep = rep_of(inst);
  return solved(realize_digraph(rep), kernel_linear(normalize(rep)), SetMode::kernel);
}

Result cmd_optimal_kernel(const Options& o, Objective obj) {
  auto inst = instance(o);
  auto w = weights(o);
  std::optional<Certificate> cert;
  Digraph g = digraph_of(inst);
  if (o.adjusted) {
    if (!w.empty()) throw Error("--weights is not supported with --adjusted");
    cert = optimal_kernel_adjusted(normalize(rep_of(inst)), obj);
  } else if (std::holds_alternative<IntervalRep>(inst)) {
    cert = optimal_kernel_duf(g, extract_duf_ordering(normalize(rep_of(inst))), obj, w);
  } else {
    cert = optimal_kernel_duf(g, ordering(o, 1), obj, w);
  }
  if (!cert) return none("no-kernel");
  return solved(g, *cert, SetMode::kernel, w);
}

Result cmd_absorbing(const Options& o, bool dominating) {
  auto inst = instance(o);
  const IntervalRep& rep = rep_of(inst);
  NormalizedRep nrep = normalize(rep);
  Digraph g = realize_digraph(rep);
  if (dominating) return solved(g, min_dominating_reflexive(nrep), SetMode::dominating);
  return solved(g, min_absorbing_reflexive(nrep), SetMode::absorbing);
}

Result cmd_mis(const Options& o) {
  auto inst = instance(o);
  Digraph g = digraph_of(inst);
  Ordering ord = std::holds_alternative<IntervalRep>(inst)
                     ? extract_duf_ordering(normalize(rep_of(inst)))
                     : ordering(o, 1);
  auto w = weights(o);
  return solved(g, max_independent_duf(g, ord, w), SetMode::independent, w);
}

Result cmd_red_blue(const Options& o) {
  auto inst = instance(o);
  auto* rep = std::get_if<IntervalBigraphRep>(&inst);
  if (!rep) throw Error("expected a bigraph representation");
  return red_blue_report(*rep, red_blue_min_dominating(*rep));
}

Result cmd_recognize(const Options& o) {
  Digraph g = digraph_of(instance(o));
  auto result = recognize_point_point(g);
  if (auto* rep = std::get_if<PointRep>(&result)) {
    if (!(realize_digraph(*rep) == g)) throw Error("internal error: point representation mismatch");
    return Report{{{"status", "point-point"},
                   {"points", {{"source", rep->source}, {"target", rep->target}}},
                   {"certificate_checked", true}},
                  kSolved};
  }
  const auto& w = std::get<AntiWalkWitness>(result);
  if (!is_anti_directed_walk(g, w)) throw Error("internal error: invalid anti-directed walk");
  return Report{{{"status", "not-point-point"},
                 {"witness", anti_walk_json(w)},
                 {"certificate_checked", true}},
                kNone};
}

Result cmd_check_ordering(const Options& o) {
  Digraph g = digraph_of(instance(o));
  Ordering ord = ordering(o, 1);
  std::optional<StructureWitness> w;
  if (o.kind == "duf") {
    validate(ord, g.vertex_count());
    w = verify_duf_ordering(g, ord);
  } else if (o.kind == "reflexive") {
    w = check_reflexive_interval_ordering(g, ord);
  } else if (o.kind == "cocomp") {
    w = verify_cocomparability_ordering(underlying_undirected(g), ord);
  } else {
    throw Error("--kind must be duf, reflexive or cocomp");
  }
  if (!w) return Report{{{"status", "valid"}, {"kind", o.kind}}, kSolved};
  return Report{{{"status", "violation"}, {"kind", o.kind}, {"witness", witness_json(*w)}}, kNone};
}

Result cmd_build_rep(const Options& o) {
  Digraph g = digraph_of(instance(o));
  Ordering ord = ordering(o, 1);
  IntervalRep rep;
  try {
    rep = build_representation(g, ord);
  } catch (const ForbiddenStructure& e) {
    return Report{{{"status", "violation"}, {"witness", witness_json(e.witness())}}, kNone};
  }
  std::string text = io::emit(rep);
  if (!o.as_json) return Text{text};
  return Report{{{"representation", text}, {"certificate_checked", verify_representation(rep, g)}},
                kSolved};
}

Result cmd_subdivide(const Options& o) {
  Digraph g = digraph_of(instance(o));
  SubdivisionMap map = k_subdivision(g, o.k);
  std::string host = io::emit(map.host);
  if (!o.out_file.empty()) io::write_file(o.out_file, host);
  if (!o.as_json) return Text{io::emit(map)};
  return Report{{{"map", io::emit(map)},
                 {"host", host},
                 {"host_vertices", map.host.vertex_count()},
                 {"host_arcs", map.host.edge_count()}},
                kSolved};
}

Result cmd_lift_project(const Options& o, bool lift) {
  SubdivisionMap map = io::parse_subdivision(io::read_file(file(o, 0, "map")));
  auto set = io::parse_vertex_list(io::read_file(file(o, 1, "set")));
  SetMode mode = set_mode(o);
  if (lift) {
    return solved(map.host, Certificate{lift_set(map, set, mode), {}, {"lift_set", false}}, mode);
  }
  return solved(map.origin, Certificate{project_set(map, set, mode), {}, {"project_set", false}}, mode);
}

Result cmd_verify_one(const Options& o) {
  Digraph g = digraph_of(instance(o));
  auto set = io::parse_vertex_list(io::read_file(file(o, 1, "set")));
  SetMode mode = set_mode(o);
  Certificate cert = verify_set(g, set, mode);
  json checks = json::object();
  for (const auto& [m, ok] : cert.checks) checks[std::string(to_string(m))] = ok;
  bool valid = cert.holds(mode);
  return Report{{{"mode", o.mode}, {"valid", valid}, {"checks", checks}}, valid ? kSolved : kNone};
}

// One random reflexive instance checked against every oracle. Returns the
// names of the comparisons that disagreed.
std::vector<std::string> batch_trial(int max_n, std::uint64_t seed) {
  gen::Rng rng(seed);
  int n = std::uniform_int_distribution<int>(1, std::max(1, max_n))(rng);
  IntervalRep rep = gen::random_reflexive_rep({n, 0}, rng);
  NormalizedRep nrep = normalize(rep);
  Digraph g = realize_digraph(rep);
  Ordering ord = extract_duf_ordering(nrep);
  oracle::OracleBudget b;
  b.subset_n = std::max(b.subset_n, n);
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  expect(verify_set(g, kernel_linear(nrep).set, SetMode::kernel).holds(SetMode::kernel), "kernel");
  auto lo = optimal_kernel_duf(g, ord, Objective::min);
  auto hi = optimal_kernel_duf(g, ord, Objective::max);
  auto blo = oracle::brute_kernel(g, oracle::KernelQuery::min, {}, b);
  auto bhi = oracle::brute_kernel(g, oracle::KernelQuery::max, {}, b);
  expect(lo && blo && lo->size() == blo->size(), "min-kernel");
  expect(hi && bhi && hi->size() == bhi->size(), "max-kernel");
  expect(min_absorbing_reflexive(nrep).size() == oracle::brute_min_absorbing(g, b).size(), "absorbing");
  expect(min_dominating_reflexive(nrep).size() == oracle::brute_min_dominating(g, b).size(), "dominating");
  expect(max_independent_duf(g, ord).size() == oracle::brute_max_independent(g, {}, b).size(), "mis");
  return bad;
}

Result cmd_verify_batch(const Options& o) {
  const int trials = std::max(0, o.trials);
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::future<std::vector<json>>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      std::vector<json> failed;
      for (int t = static_cast<int>(w); t < trials; t += static_cast<int>(workers)) {
        std::uint64_t seed = o.seed + static_cast<std::uint64_t>(t);
        auto bad = batch_trial(o.n, seed);
        if (!bad.empty()) failed.push_back({{"seed", seed}, {"checks", bad}});
      }
      return failed;
    }));
  }
  std::vector<json> failed;
  for (auto& j : jobs) {
    auto part = j.get();
    failed.insert(failed.end(), part.begin(), part.end());
  }
  std::sort(failed.begin(), failed.end(),
            [](const json& x, const json& y) { return x["seed"] < y["seed"]; });
  return Report{{{"trials", trials}, {"failures", failed.size()}, {"failed", failed}},
                failed.empty() ? kSolved : kNone};
}

Result cmd_oracle(const Options& o) {
  auto b = budget(o);
  const std::string& p = o.problem;
  if (p == "red-blue") {
    auto inst = instance(o);
    auto* rep = std::get_if<IntervalBigraphRep>(&inst);
    if (!rep) throw Error("expected a bigraph representation");
    return red_blue_report(*rep, oracle::brute_red_blue(*rep, b));
  }
  Digraph g = digraph_of(instance(o));
  auto w = weights(o);
  if (p == "kernel") {
    auto query = o.objective == "exists" ? oracle::KernelQuery::exists
                 : objective(o) == Objective::min ? oracle::KernelQuery::min
                                                  : oracle::KernelQuery::max;
    auto cert = oracle::brute_kernel(g, query, w, b);
    if (!cert) return none("no-kernel");
    return solved(g, *cert, SetMode::kernel, w);
  }
  if (p == "absorbing") return solved(g, oracle::brute_min_absorbing(g, b), SetMode::absorbing);
  if (p == "dominating") return solved(g, oracle::brute_min_dominating(g, b), SetMode::dominating);
  if (p == "mis") return solved(g, oracle::brute_max_independent(g, w, b), SetMode::independent, w);
  if (p == "k33") {
    auto k = oracle::find_induced_k33(underlying_undirected(g), b);
    if (!k) return none("no-induced-k33");
    return Report{{{"left", k->left}, {"right", k->right}}, kSolved};
  }
  if (p == "ordering") {
    oracle::OrderingKind kind;
    if (o.kind == "duf") kind = oracle::OrderingKind::duf;
    else if (o.kind == "reflexive") kind = oracle::OrderingKind::reflexive_interval;
    else throw Error("--kind must be duf or reflexive");
    auto ord = oracle::brute_ordering_search(g, kind, b);
    if (!ord) return none("no-ordering");
    return Report{{{"ordering", ord->perm}}, kSolved};
  }
  if (p == "forbidden") {
    auto wit = oracle::brute_forbidden_structure(g, ordering(o, 1), b);
    if (!wit) return Report{{{"status", "valid"}}, kSolved};
    return Report{{{"status", "violation"}, {"witness", witness_json(*wit)}}, kNone};
  }
  if (p == "anti-walk") {
    auto wit = oracle::brute_anti_directed_walk(g, b);
    if (!wit) return none("no-anti-directed-walk");
    return Report{{{"witness", anti_walk_json(*wit)}}, kSolved};
  }
  throw Error("unknown oracle problem '" + p + "'");
}

Result cmd_gen(const Options& o) {
  gen::Rng rng(o.seed);
  std::string text;
  if (o.kind == "reflexive-interval") {
    text = io::emit(normalize(gen::random_reflexive_rep({o.n, o.span}, rng)).to_rep());
  } else if (o.kind == "adjusted-interval") {
    text = io::emit(gen::random_adjusted_rep({o.n, o.span}, rng));
  } else if (o.kind == "interval-bigraph") {
    text = io::emit(gen::random_interval_bigraph(o.a, o.b, o.grid, rng));
  } else if (o.kind == "random-digraph") {
    text = io::emit(gen::random_digraph(o.n, o.p, o.loop_p, rng));
  } else if (o.kind == "subdivided") {
    SubdivisionMap map = gen::random_subdivided(o.n, o.p, o.k, rng);
    if (!o.out_file.empty()) io::write_file(o.out_file, io::emit(map));
    text = io::emit(map.host);
  } else {
    throw Error("unknown generator '" + o.kind + "'");
  }
  if (!o.as_json) return Text{text};
  return Report{{{"kind", o.kind}, {"seed", o.seed}, {"instance", text}}, kSolved};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algorithms for reflexive interval digraphs and related classes", "ivdg"};
  app.require_subcommand(1);
  Options o;
  std::function<Result()> action;

  auto positional = [&](CLI::App* sub, const char* desc) {
    sub->add_option("files", o.files, desc);
  };
  auto command = [&](const char* name, const char* desc, std::function<Result()> fn) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* kernel = command("kernel", "kernel of a reflexive interval digraph (linear time)",
                         [&] { return cmd_kernel(o); });
  positional(kernel, "interval representation");

  for (auto [name, obj] : {std::pair{"min-kernel", Objective::min}, std::pair{"max-kernel", Objective::max}}) {
    auto* sub = command(name, "optimal kernel of a DUF-digraph or interval representation",
                        [&, obj = obj] { return cmd_optimal_kernel(o, obj); });
    positional(sub, "digraph and ordering, or interval representation");
    sub->add_flag("--adjusted", o.adjusted, "use the adjusted-interval algorithm");
    sub->add_option("--weights", o.weights_file, "vertex weights file");
  }

  positional(command("absorbing", "minimum absorbing set of a reflexive interval digraph",
                     [&] { return cmd_absorbing(o, false); }),
             "interval representation");
  positional(command("dominating", "minimum dominating set of a reflexive interval digraph",
                     [&] { return cmd_absorbing(o, true); }),
             "interval representation");

  auto* mis = command("mis", "maximum independent set of a DUF-digraph", [&] { return cmd_mis(o); });
  positional(mis, "digraph and ordering, or interval representation");
  mis->add_option("--weights", o.weights_file, "vertex weights file");

  positional(command("red-blue", "minimum A-dominating subset of B in an interval bigraph",
                     [&] { return cmd_red_blue(o); }),
             "bigraph representation");
  positional(command("recognize-pp", "point-point digraph recognition",
                     [&] { return cmd_recognize(o); }),
             "digraph");

  auto* check = command("check-ordering", "check a vertex ordering", [&] { return cmd_check_ordering(o); });
  positional(check, "digraph and ordering");
  check->add_option("--kind", o.kind, "duf | reflexive | cocomp")->required();

  auto* build = command("build-rep", "interval representation from a valid ordering",
                        [&] { return cmd_build_rep(o); });
  positional(build, "digraph and ordering");
  build->add_flag("--json", o.as_json, "wrap the output in a JSON report");

  auto* sub = command("subdivide", "k-subdivision of an irreflexive digraph", [&] { return cmd_subdivide(o); });
  positional(sub, "digraph");
  sub->add_option("--k", o.k, "path length")->required();
  sub->add_option("--out", o.out_file, "write the host digraph here");
  sub->add_flag("--json", o.as_json, "wrap the output in a JSON report");

  for (auto [name, lift] : {std::pair{"lift", true}, std::pair{"project", false}}) {
    auto* lp = command(name, lift ? "lift an origin set into the subdivision host"
                                  : "project a host set back to the origin",
                       [&, lift = lift] { return cmd_lift_project(o, lift); });
    positional(lp, "subdivision map and vertex set");
    lp->add_option("--mode", o.mode, "kernel | absorbing")->required();
  }

  auto* orc = command("oracle", "brute-force reference solvers", [&] { return cmd_oracle(o); });
  orc->add_option("problem", o.problem,
                  "kernel | absorbing | dominating | mis | red-blue | k33 | ordering | forbidden | anti-walk")
      ->required();
  positional(orc, "instance (and ordering for 'forbidden')");
  orc->add_option("--objective", o.objective, "min | max | exists");
  orc->add_option("--kind", o.kind, "duf | reflexive");
  orc->add_option("--weights", o.weights_file, "vertex weights file");
  orc->add_option("--budget-n", o.budget_n, "largest n the oracle accepts");

  auto* ver = command("verify", "check a vertex set, or run a random oracle batch", [&] {
    return o.batch ? cmd_verify_batch(o) : cmd_verify_one(o);
  });
  positional(ver, "instance and vertex set");
  ver->add_option("--mode", o.mode, "independent | absorbing | dominating | kernel | solution");
  ver->add_flag("--batch", o.batch, "compare algorithms with oracles on random instances");
  ver->add_option("--trials", o.trials, "batch trials");
  ver->add_option("--n", o.n, "largest batch instance");
  ver->add_option("--seed", o.seed, "batch seed");

  auto* gen = command("gen", "random instance generators", [&] { return cmd_gen(o); });
  gen->add_option("kind", o.kind,
                  "reflexive-interval | adjusted-interval | interval-bigraph | random-digraph | subdivided")
      ->required();
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--n", o.n, "vertices");
  gen->add_option("--span", o.span, "interval extent around the anchor (0: unrestricted)");
  gen->add_option("--a", o.a, "bigraph part A size");
  gen->add_option("--b", o.b, "bigraph part B size");
  gen->add_option("--grid", o.grid, "bigraph grid size");
  gen->add_option("--p", o.p, "arc probability");
  gen->add_option("--loop-p", o.loop_p, "loop probability");
  gen->add_option("--k", o.k, "subdivision length");
  gen->add_option("--out", o.out_file, "write the subdivision map here");
  gen->add_flag("--json", o.as_json, "wrap the output in a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSolved : kError;
  }

  try {
    Result result = action();
    if (auto* text = std::get_if<Text>(&result)) {
      out << text->text;
      return kSolved;
    }
    auto& report = std::get<Report>(result);
    out << report.body.dump() << '\n';
    return report.code;
  } catch (const WitnessError& e) {
    out << json{{"status", "error"}, {"message", e.what()}, {"witness", witness_json(e.witness())}}.dump()
        << '\n';
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    out << json{{"status", "error"}, {"message", e.what()}}.dump() << '\n';
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace ivdg::cli
