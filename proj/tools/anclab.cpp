// anclab: ancestry labels for rooted trees — generate, encode, query,
// verify, and benchmark from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or format error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anclab/anclab.hpp"

namespace {

using namespace anclab;

RootedTree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadSpec("cannot open tree file '" + path + "'");
  return read_tree(in);
}

LabelFile load_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadSpec("cannot open label file '" + path + "'");
  return read_labels(in);
}

/// Writes to the given path, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw BadSpec("cannot open output file '" + path + "'");
  out << content;
}

std::vector<std::string> split_commas(const std::string& csv) {
  std::vector<std::string> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<Label> encode_with(Scheme scheme, const RootedTree& tree) {
  return scheme == Scheme::Classic ? encode_classic(tree) : encode_new(tree);
}

bool decode_with(Scheme scheme, const Label& lu, const Label& lv) {
  return scheme == Scheme::Classic ? decode_classic(lu, lv) : decode_new(lu, lv);
}

struct GenOptions {
  std::string kind = "path";
  std::uint64_t n = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string map_out;
};

int cmd_gen(const GenOptions& opt) {
  auto [kind, arity] = parse_kind(opt.kind);
  GeneratedTree g = generate_with_map({kind, opt.n, opt.seed, arity});
  emit(opt.out, format_tree(g.tree));
  if (!opt.map_out.empty()) {
    std::ostringstream map_text;
    map_text << "# old_id new_id\n";
    for (std::size_t old_id = 0; old_id < g.old_to_new.size(); ++old_id)
      map_text << old_id << ' ' << g.old_to_new[old_id] << "\n";
    emit(opt.map_out, map_text.str());
  }
  return 0;
}

struct EncodeOptions {
  std::string scheme = "classic";
  std::string tree_file;
  std::string out;
};

int cmd_encode(const EncodeOptions& opt) {
  const Scheme scheme = scheme_from_name(opt.scheme);
  const RootedTree tree = load_tree(opt.tree_file);
  LabelFile file{scheme, encode_with(scheme, tree)};
  emit(opt.out, format_labels(file));
  return 0;
}

struct QueryOptions {
  std::string label_file;
  std::uint64_t u = 0;
  std::uint64_t v = 0;
};

int cmd_query(const QueryOptions& opt) {
  const LabelFile file = load_labels(opt.label_file);
  if (opt.u >= file.labels.size() || opt.v >= file.labels.size())
    throw BadSpec("node id out of range [0, " + std::to_string(file.labels.size()) + ")");
  const bool ans = decode_with(file.scheme, file.labels[opt.u], file.labels[opt.v]);
  std::cout << (ans ? "true" : "false") << "\n";
  return 0;
}

struct VerifyOptions {
  std::string scheme = "classic";
  std::string tree_file;
  std::string pairs = "auto";
  std::uint64_t seed = 0;
};

// Size cutoff for the O(n^2) validators (all-pairs left-inclusion and the
// necessary conditions) and for defaulting to exhaustive pair checking.
constexpr std::size_t kQuadraticLimit = 20000;

int cmd_verify(const VerifyOptions& opt) {
  const Scheme scheme = scheme_from_name(opt.scheme);
  const RootedTree tree = load_tree(opt.tree_file);
  const std::size_t n = tree.size();
  bool ok = true;
  auto report = [&ok](const std::string& name, bool pass, const std::string& witness) {
    std::cout << (pass ? "ok      " : "FAILED  ") << name;
    if (!pass && !witness.empty()) std::cout << ": " << witness;
    std::cout << "\n";
    if (!pass) ok = false;
  };

  // Assignment plus scheme-specific validators.
  IntervalAssignment ia;
  ProcessingOrder order;
  std::vector<Label> labels;
  unsigned want_bits = 0;
  if (scheme == Scheme::Classic) {
    AssignResult r = assign_classic_full(tree);
    ia = std::move(r.ia);
    order = std::move(r.order);
    want_bits = classic_label_bits(n);
    CheckResult inv = check_classic_invariant(tree, ia);
    report("classic size invariant (b_bar - a + 1 = |T_u|)", inv.ok, inv.witness);
  } else {
    KAnnotatedAssignment ka = assign_new(tree);
    CheckResult inv = check_new_invariants(tree, ka);
    report("approximation growth invariants", inv.ok, inv.witness);
    ia = std::move(ka.ia);
    order = std::move(ka.order);
    want_bits = new_label_bits(n);
  }
  labels = encode_with(scheme, tree);

  bool sizes_ok = true;
  for (const Label& l : labels) sizes_ok = sizes_ok && l.size() == want_bits;
  report("label size = " + std::to_string(want_bits) + " bits", sizes_ok, "");

  CheckResult ext = check_extrema(tree, ia);
  report("stored extrema match subtree maxima", ext.ok, ext.witness);
  AssignmentReport suff = check_sufficient_conditions(tree, ia);
  report("sufficient conditions", suff.all_pass(), suff.first_witness());
  CheckResult basic = check_basic_property(tree, ia, order);
  report("basic size property", basic.ok, basic.witness);

  if (n <= kQuadraticLimit) {
    CheckResult li = check_left_including(tree, ia);
    report("left-including (definition, O(n^2))", li.ok, li.witness);
    AssignmentReport nec = check_necessary_conditions(tree, ia);
    report("necessary conditions (O(n^2))", nec.all_pass(), nec.first_witness());
  } else {
    std::cout << "skip    quadratic validators (n > " << kQuadraticLimit << ")\n";
  }

  // Decoder versus the brute-force oracle.
  std::string pairs = opt.pairs;
  if (pairs == "auto") pairs = n <= 10000 ? "all" : "random:1000000";
  std::uint64_t mismatches = 0;
  std::string first_bad;
  auto check_pair = [&](NodeId u, NodeId v, bool truth) {
    const bool got = decode_with(scheme, labels[u], labels[v]);
    if (got != truth && ++mismatches == 1)
      first_bad = "pair (" + std::to_string(u) + ", " + std::to_string(v) + "): decoder says " +
                  (got ? "true" : "false") + ", oracle says " + (truth ? "true" : "false");
  };
  std::uint64_t tested = 0;
  if (pairs == "all") {
    std::optional<AncestorMatrix> anc;
    if (n <= 32768) anc.emplace(tree);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = 0; v < n; ++v)
        check_pair(u, v, anc ? (*anc)(u, v) : is_ancestor_oracle(tree, u, v));
    tested = static_cast<std::uint64_t>(n) * n;
  } else if (pairs.rfind("random:", 0) == 0) {
    std::uint64_t count = 0;
    try {
      count = std::stoull(pairs.substr(7));
    } catch (const std::exception&) {
      throw BadSpec("bad pair count in '" + pairs + "'");
    }
    SplitMix64 rng(opt.seed);
    for (std::uint64_t i = 0; i < count; ++i) {
      const NodeId u = static_cast<NodeId>(rng.below(n));
      const NodeId v = static_cast<NodeId>(rng.below(n));
      check_pair(u, v, is_ancestor_oracle(tree, u, v));
    }
    tested = count;
  } else {
    throw BadSpec("--pairs must be all, random:K, or auto");
  }
  report("decoder agrees with oracle on " + std::to_string(tested) + " pairs", mismatches == 0,
         first_bad);

  return ok ? 0 : 1;
}

struct BenchOptions {
  std::string schemes = "classic,new";
  std::string sizes;
  std::string kinds = "attach";
  std::uint64_t seed = 0;
  bool no_timing = false;
  std::string out;
};

int cmd_bench(const BenchOptions& opt) {
  BenchConfig config;
  config.schemes.clear();
  for (const std::string& s : split_commas(opt.schemes))
    config.schemes.push_back(scheme_from_name(s));
  for (const std::string& s : split_commas(opt.sizes)) {
    try {
      config.sizes.push_back(std::stoull(s));
    } catch (const std::exception&) {
      throw BadSpec("bad size '" + s + "'");
    }
  }
  if (config.sizes.empty()) throw BadSpec("--sizes must list at least one n");
  config.kinds.clear();
  for (const std::string& s : split_commas(opt.kinds)) config.kinds.push_back(parse_kind(s));
  config.seed = opt.seed;
  config.measure_time = !opt.no_timing;

  std::ostringstream csv;
  write_csv(csv, run_bench(config));
  emit(opt.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-based ancestry labels for rooted trees"};
  app.require_subcommand(1);
  int rc = 0;

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "Generate a tree file");
  gen->add_option("--kind", gen_opt.kind, "path|star|kary:A|caterpillar|attach|prufer")
      ->required();
  gen->add_option("--n", gen_opt.n, "node count")->required();
  gen->add_option("--seed", gen_opt.seed, "PRNG seed (random kinds)");
  gen->add_option("-o,--output", gen_opt.out, "output tree file (stdout if omitted)");
  gen->add_option("--emit-map", gen_opt.map_out, "also write the old->new id map here");
  gen->callback([&] { rc = cmd_gen(gen_opt); });

  EncodeOptions enc_opt;
  CLI::App* enc = app.add_subcommand("encode", "Encode a tree file into labels");
  enc->add_option("--scheme", enc_opt.scheme, "classic|new")->required();
  enc->add_option("treefile", enc_opt.tree_file, "input tree file")->required();
  enc->add_option("-o,--output", enc_opt.out, "output label file (stdout if omitted)");
  enc->callback([&] { rc = cmd_encode(enc_opt); });

  QueryOptions query_opt;
  CLI::App* query = app.add_subcommand("query", "Answer one ancestry query from labels");
  query->add_option("labelfile", query_opt.label_file, "input label file")->required();
  query->add_option("u", query_opt.u, "candidate ancestor id")->required();
  query->add_option("v", query_opt.v, "candidate descendant id")->required();
  query->callback([&] { rc = cmd_query(query_opt); });

  VerifyOptions ver_opt;
  CLI::App* ver = app.add_subcommand("verify", "Check a scheme against the oracle + validators");
  ver->add_option("--scheme", ver_opt.scheme, "classic|new")->required();
  ver->add_option("treefile", ver_opt.tree_file, "input tree file")->required();
  ver->add_option("--pairs", ver_opt.pairs, "all | random:K | auto (default)");
  ver->add_option("--seed", ver_opt.seed, "seed for random pair sampling");
  ver->callback([&] { rc = cmd_verify(ver_opt); });

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "Label-size/time CSV across schemes and trees");
  bench->add_option("--schemes", bench_opt.schemes, "comma list: classic,new");
  bench->add_option("--sizes", bench_opt.sizes, "comma list of node counts")->required();
  bench->add_option("--kinds", bench_opt.kinds, "comma list of tree kinds");
  bench->add_option("--seed", bench_opt.seed, "PRNG seed");
  bench->add_flag("--no-timing", bench_opt.no_timing, "report encode_ms as 0 (byte-stable CSV)");
  bench->add_option("-o,--output", bench_opt.out, "output CSV file (stdout if omitted)");
  bench->callback([&] { rc = cmd_bench(bench_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const anclab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
