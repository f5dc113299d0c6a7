// Command-line front end: decompose graphs, verify against the brute-force
// oracle, generate instances, and benchmark scaling.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tecc/decompose.hpp"
#include "tecc/generator.hpp"
#include "tecc/io.hpp"
#include "tecc/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct DecomposeArgs {
  std::string input;
  std::string format = "text";
  std::string output;
};

int cmd_decompose(const DecomposeArgs& args) {
  const auto g = tecc::read_edge_list_file(args.input);
  const auto dec = tecc::decompose(g);
  std::string payload;
  if (args.format == "text")
    payload = tecc::to_text(tecc::make_doc(g, dec));
  else if (args.format == "json")
    payload = tecc::to_json(tecc::make_doc(g, dec));
  else if (args.format == "dot")
    payload = tecc::export_dot(g, dec);
  else
    throw CLI::ValidationError("--format must be text, json or dot");

  if (args.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + args.output + " for writing");
    out << payload;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  int corpus = 0;
  std::uint64_t seed = 1;
  int max_n = 10;
  int max_m = 16;
  int planted = 0;
  bool mutate = false;
};

// Drops one edge from the first non-empty component, so the comparison must
// fail; exercises that the harness actually detects damage.
void inject_mutation(tecc::Decomposition& dec) {
  for (auto& comp : dec.components) {
    if (!comp.edges.empty()) {
      comp.edges.pop_back();
      return;
    }
  }
}

tecc::Verdict verify_one(const tecc::Multigraph& g, bool mutate) {
  auto dec = tecc::decompose(g, tecc::DecomposeOptions{.debug_checks = true});
  if (mutate) inject_mutation(dec);
  const auto ref = tecc::reference_aux_subgraphs(g);
  return tecc::check_equivalence(g, dec, ref);
}

int cmd_verify(const VerifyArgs& args) {
  int passed = 0, failed = 0, skipped = 0;
  auto report = [&](const std::string& name, const tecc::Verdict& verdict) {
    if (verdict.pass) {
      ++passed;
      std::cout << "PASS " << name << '\n';
    } else {
      ++failed;
      std::cout << "FAIL " << name << ": " << verdict.diff << '\n';
    }
  };

  if (!args.input.empty()) {
    const auto g = tecc::read_edge_list_file(args.input);
    report(args.input, verify_one(g, args.mutate));
  } else {
    for (int i = 0; i < args.corpus; ++i) {
      tecc::SplitMix64 rng(args.seed + static_cast<std::uint64_t>(i));
      const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(args.max_n)));
      const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(args.max_m) + 1));
      const auto g = tecc::gen_random_multigraph(n, m, rng.next());
      try {
        report("random[" + std::to_string(i) + "] n=" + std::to_string(n) +
                   " m=" + std::to_string(m),
               verify_one(g, args.mutate && i == 0));
      } catch (const tecc::OracleSizeError& e) {
        ++skipped;
        std::cout << "SKIP random[" << i << "]: " << e.what() << '\n';
      }
    }
    for (int i = 0; i < args.planted; ++i) {
      tecc::PlantSpec spec;
      const int blocks = 1 + i % 4;
      for (int b = 0; b < blocks; ++b)
        spec.blocks.push_back({static_cast<tecc::BlockKind>((i + b) % 3),
                               (i + b) % 3 == 2 ? 3 + b % 3 : 4 + b % 2});
      spec.skeleton = static_cast<tecc::Skeleton>(i % (blocks < 2 ? 2 : 3));
      spec.connector =
          spec.skeleton == tecc::Skeleton::Cycle || i % 2 == 0 ? tecc::Connector::Bridge
                                                               : tecc::Connector::TwoEdgeBundle;
      spec.seed = args.seed + static_cast<std::uint64_t>(i);
      const auto inst = tecc::gen_planted(spec);
      try {
        report("planted[" + std::to_string(i) + "]", verify_one(inst.graph, false));
      } catch (const tecc::OracleSizeError& e) {
        ++skipped;
        std::cout << "SKIP planted[" << i << "]: " << e.what() << '\n';
      }
    }
  }

  std::cout << passed << "/" << (passed + failed) << " PASS";
  if (skipped > 0) std::cout << " (" << skipped << " skipped: over oracle size guard)";
  std::cout << '\n';
  return failed == 0 ? kExitOk : kExitVerifyFail;
}

struct GenArgs {
  std::string spec;
  std::uint64_t seed = 0;
  std::string output;
};

// key=value pairs separated by ';' or ','. A comma-separated fragment
// without '=' extends the previous value, so "blocks=k4,k4;skeleton=path"
// and "n=6,m=10" both parse.
std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& body) {
  std::vector<std::pair<std::string, std::string>> kv;
  std::istringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::istringstream parts(item);
    std::string part;
    while (std::getline(parts, part, ',')) {
      const auto eq = part.find('=');
      if (eq != std::string::npos) {
        kv.emplace_back(part.substr(0, eq), part.substr(eq + 1));
      } else if (!kv.empty()) {
        kv.back().second += "," + part;
      } else {
        throw CLI::ValidationError("--spec: expected key=value, got \"" + part + "\"");
      }
    }
  }
  return kv;
}

tecc::BlockSpec parse_block(const std::string& token) {
  auto make = [&](tecc::BlockKind kind, size_t prefix) {
    return tecc::BlockSpec{kind, std::stoi(token.substr(prefix))};
  };
  if (token.rfind("dc", 0) == 0) return make(tecc::BlockKind::DoubledCycle, 2);
  if (token.rfind('k', 0) == 0) return make(tecc::BlockKind::Complete, 1);
  if (token.rfind('w', 0) == 0) return make(tecc::BlockKind::Wheel, 1);
  throw CLI::ValidationError("--spec: unknown block \"" + token + "\" (use k4, w5, dc3, ...)");
}

tecc::Multigraph graph_from_spec(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (head == "random") {
    int n = -1, m = -1;
    for (const auto& [k, v] : parse_kv(body)) {
      if (k == "n")
        n = std::stoi(v);
      else if (k == "m")
        m = std::stoi(v);
      else
        throw CLI::ValidationError("--spec random: unknown key " + k);
    }
    if (n < 1 || m < 0) throw CLI::ValidationError("--spec random needs n>=1 and m>=0");
    return tecc::gen_random_multigraph(n, m, seed);
  }
  if (head == "planted") {
    tecc::PlantSpec ps;
    ps.seed = seed;
    for (const auto& [k, v] : parse_kv(body)) {
      if (k == "blocks") {
        std::istringstream bs(v);
        std::string tok;
        while (std::getline(bs, tok, ',')) ps.blocks.push_back(parse_block(tok));
      } else if (k == "skeleton") {
        if (v == "path")
          ps.skeleton = tecc::Skeleton::Path;
        else if (v == "tree")
          ps.skeleton = tecc::Skeleton::Tree;
        else if (v == "cycle")
          ps.skeleton = tecc::Skeleton::Cycle;
        else
          throw CLI::ValidationError("--spec planted: unknown skeleton " + v);
      } else if (k == "connector") {
        if (v == "bridge")
          ps.connector = tecc::Connector::Bridge;
        else if (v == "bundle")
          ps.connector = tecc::Connector::TwoEdgeBundle;
        else
          throw CLI::ValidationError("--spec planted: unknown connector " + v);
      } else {
        throw CLI::ValidationError("--spec planted: unknown key " + k);
      }
    }
    return tecc::gen_planted(ps).graph;
  }
  if (head == "chain") {
    long long m = -1;
    for (const auto& [k, v] : parse_kv(body)) {
      if (k == "m")
        m = std::stoll(v);
      else
        throw CLI::ValidationError("--spec chain: unknown key " + k);
    }
    return tecc::gen_scaling_instance(m);
  }
  throw CLI::ValidationError("--spec must start with random:, planted: or chain:");
}

int cmd_gen(const GenArgs& args) {
  const auto g = graph_from_spec(args.spec, args.seed);
  std::ofstream out(args.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + args.output + " for writing");
  out << "# gen spec=" << args.spec << " seed=" << args.seed << '\n';
  tecc::write_edge_list(out, g);
  return kExitOk;
}

struct BenchArgs {
  std::vector<long long> sizes{10000, 20000, 100000, 200000, 1000000, 2000000};
  int reps = 5;
};

// One benchmark subject: the instance plus a batch size chosen so a timed
// sample spans at least ~20 ms, keeping scheduler noise out of the medians.
struct BenchSubject {
  tecc::Multigraph graph;
  long long target = 0;
  int batch = 1;
  tecc::WorkCounters counters;  // per single run
};

BenchSubject prepare_subject(long long target) {
  using clock = std::chrono::steady_clock;
  BenchSubject s{tecc::gen_scaling_instance(target), target};
  const auto t0 = clock::now();
  tecc::decompose(s.graph, s.counters);
  const double single_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  s.batch = static_cast<int>(std::clamp(20.0 / std::max(single_ms, 0.01), 1.0, 64.0));
  return s;
}

double time_batch(const BenchSubject& s) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  for (int r = 0; r < s.batch; ++r) {
    tecc::WorkCounters ctr;
    tecc::decompose(s.graph, ctr);
  }
  return std::chrono::duration<double, std::milli>(clock::now() - t0).count() / s.batch;
}

int cmd_bench(const BenchArgs& args) {
  nlohmann::ordered_json report;
  report["rows"] = nlohmann::ordered_json::array();

  std::vector<BenchSubject> subjects;
  for (const long long target : args.sizes) {
    subjects.push_back(prepare_subject(target));
    const auto& s = subjects.back();
    std::vector<double> times;
    for (int r = 0; r < args.reps; ++r) times.push_back(time_batch(s));
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];

    nlohmann::ordered_json row;
    row["target_edges"] = target;
    row["n"] = s.graph.vertex_count();
    row["m"] = s.graph.edge_count();
    row["reps"] = args.reps;
    row["batch"] = s.batch;
    row["median_ms"] = median;
    row["ns_per_edge"] = 1e6 * median / static_cast<double>(s.graph.edge_count());
    row["counters"] = {{"dfs_steps", s.counters.dfs_steps},
                       {"path_link_traversals", s.counters.path_link_traversals},
                       {"alpha_insertions", s.counters.alpha_insertions},
                       {"ear_comparisons", s.counters.ear_comparisons}};
    report["rows"].push_back(std::move(row));
  }

  // Doubling verdicts: interleave the pair so machine-speed drift cancels.
  report["doublings"] = nlohmann::ordered_json::array();
  bool linear = true;
  for (size_t i = 1; i < subjects.size(); ++i) {
    const double m_ratio = static_cast<double>(subjects[i].graph.edge_count()) /
                           static_cast<double>(subjects[i - 1].graph.edge_count());
    if (m_ratio < 1.9 || m_ratio > 2.1) continue;  // only grade actual doublings
    std::vector<double> ratios;
    for (int r = 0; r < std::max(args.reps, 5); ++r)
      ratios.push_back(time_batch(subjects[i]) / time_batch(subjects[i - 1]));
    std::sort(ratios.begin(), ratios.end());
    const double wall_ratio = ratios[ratios.size() / 2];
    const auto work = [](const BenchSubject& s) {
      return static_cast<double>(s.counters.path_link_traversals +
                                 s.counters.alpha_insertions);
    };
    const double counter_ratio = work(subjects[i]) / work(subjects[i - 1]);
    const bool ok = wall_ratio >= 1.6 && wall_ratio <= 2.6 && counter_ratio <= 2.2;
    linear = linear && ok;
    report["doublings"].push_back({{"m_from", subjects[i - 1].graph.edge_count()},
                                   {"m_to", subjects[i].graph.edge_count()},
                                   {"wall_ratio", wall_ratio},
                                   {"counter_ratio", counter_ratio},
                                   {"pass", ok}});
  }
  report["linearity"] = linear ? "PASS" : "FAIL";
  std::cout << report.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-edge-connected component decomposition with auxiliary subgraphs"};
  app.require_subcommand(1);

  DecomposeArgs dargs;
  auto* dec = app.add_subcommand("decompose", "decompose a graph file");
  dec->add_option("-i,--input", dargs.input, "edge list file")->required();
  dec->add_option("-f,--format", dargs.format, "text | json | dot");
  dec->add_option("-o,--output", dargs.output, "output file (default stdout)");

  VerifyArgs vargs;
  auto* ver = app.add_subcommand("verify", "check the decomposer against the oracle");
  ver->add_option("-i,--input", vargs.input, "single edge list file");
  ver->add_option("--corpus", vargs.corpus, "number of random instances");
  ver->add_option("--seed", vargs.seed, "corpus seed");
  ver->add_option("--max-n", vargs.max_n, "max vertices per random instance");
  ver->add_option("--max-m", vargs.max_m, "max edges per random instance");
  ver->add_option("--planted", vargs.planted, "number of planted instances");
  ver->add_flag("--mutate", vargs.mutate, "corrupt output first (self-test; must FAIL)");

  GenArgs gargs;
  auto* gen = app.add_subcommand("gen", "generate an edge list file");
  gen->add_option("--spec", gargs.spec,
                  "random:n=..,m=.. | planted:blocks=k4,w5;skeleton=path;connector=bundle | "
                  "chain:m=..")
      ->required();
  gen->add_option("--seed", gargs.seed, "generator seed")->required();
  gen->add_option("-o,--output", gargs.output, "output file")->required();

  BenchArgs bargs;
  auto* ben = app.add_subcommand("bench", "time the decomposer on planted chains");
  ben->add_option("--sizes", bargs.sizes, "target edge counts")->delimiter(',');
  ben->add_option("--reps", bargs.reps, "repetitions per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dec->parsed()) return cmd_decompose(dargs);
    if (ver->parsed()) {
      if (vargs.input.empty() && vargs.corpus == 0 && vargs.planted == 0) {
        std::cerr << "verify: need -i FILE or --corpus/--planted\n";
        return kExitUsage;
      }
      return cmd_verify(vargs);
    }
    if (gen->parsed()) return cmd_gen(gargs);
    if (ben->parsed()) return cmd_bench(bargs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
