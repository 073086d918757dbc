// Command-line front end: exact ring arithmetic, configuration generators,
// divisibility extraction, large-set descriptions, subsystem builders, and
// the finite Schur/Hindman/PSPP search harness. JSON on stdout, diagnostics
// on stderr. Exit 0 on success/pass, 1 on not-found/violation, 2 on usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ramsey/builder.hpp"
#include "ramsey/configs.hpp"
#include "ramsey/extraction.hpp"
#include "ramsey/harness.hpp"
#include "ramsey/sequences.hpp"
#include "ramsey/set_algebra.hpp"

using json = nlohmann::json;
using namespace ramsey;

namespace {

bool g_jsonl = false;

void emit(const json& j) {
  if (g_jsonl) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

unsigned long long enum_cap() {
  if (const char* env = std::getenv("RAMSEY_RINGS_MAX_ENUM")) {
    return std::stoull(env);
  }
  return kDefaultEnumCap;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

unsigned long long splitmix64(unsigned long long x) {
  x += 0x9e3779b97f4a7c15ull;
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

template <class T>
std::vector<T> parse_terms(const std::string& csv) {
  std::vector<T> terms;
  for (const auto& part : split(csv, ',')) terms.push_back(RingIO<T>::parse(part));
  return terms;
}

template <class T>
std::vector<T> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sequence file: " + path);
  std::vector<T> values;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    values.push_back(RingIO<T>::parse(line));
  }
  if (values.empty()) throw std::invalid_argument("sequence file is empty: " + path);
  return values;
}

SequenceSource<Int> make_int_seq(const std::string& spec, Index bound);

// Sequence specs: ones | zeros | natural | csv:1,2,4 | file:PATH |
// random:SEED[:RADIUS] | interleave:INNER (gauss/quat only, INNER an
// integer spec).
template <class T>
SequenceSource<T> make_seq(const std::string& spec, Index bound) {
  if (spec == "ones") {
    return SequenceSource<T>([](Index) { return T(1); }, bound, "ones");
  }
  if (spec == "zeros") {
    return SequenceSource<T>([](Index) { return T(0); }, bound, "zeros");
  }
  if (spec == "natural") {
    return SequenceSource<T>([](Index n) { return T(Int(n)); }, bound, "natural");
  }
  if (spec.starts_with("csv:")) {
    return SequenceSource<T>::from_list(parse_terms<T>(spec.substr(4)), "csv");
  }
  if (spec.starts_with("file:")) {
    return SequenceSource<T>::from_list(read_sequence_file<T>(spec.substr(5)), spec.substr(5));
  }
  if (spec.starts_with("random:")) {
    const auto parts = split(spec.substr(7), ':');
    const unsigned long long seed = std::stoull(parts.at(0));
    const long radius = parts.size() > 1 ? std::stol(parts[1]) : 50;
    return SequenceSource<T>(
        [seed, radius](Index n) {
          auto draw = [&](int slot) {
            const auto h = splitmix64(seed ^ splitmix64(
                                                 static_cast<unsigned long long>(n) * 4 +
                                                 static_cast<unsigned long long>(slot)));
            return static_cast<long>(h % (2 * static_cast<unsigned long long>(radius) + 1)) -
                   radius;
          };
          if constexpr (std::is_same_v<T, GaussianInt>) {
            return T{draw(0), draw(1)};
          } else if constexpr (std::is_same_v<T, LipschitzQuat>) {
            return T{draw(0), draw(1), draw(2), draw(3)};
          } else {
            return T(draw(0));
          }
        },
        bound, spec);
  }
  if (spec.starts_with("interleave:")) {
    if constexpr (std::is_same_v<T, GaussianInt>) {
      return interleave_gaussian(make_int_seq(spec.substr(11), bound));
    } else if constexpr (std::is_same_v<T, LipschitzQuat>) {
      return interleave_quaternion(make_int_seq(spec.substr(11), bound));
    } else {
      throw std::invalid_argument("interleave: needs --ring gauss or quat");
    }
  }
  throw std::invalid_argument("unknown sequence spec: " + spec);
}

SequenceSource<Int> make_int_seq(const std::string& spec, Index bound) {
  return make_seq<Int>(spec, bound);
}

// Coloring specs over [1..n]: constant | parity | residue:M |
// random:SEED:COLORS | file:PATH with a {"value": color} JSON map.
std::pair<std::function<int(const Int&)>, int> make_coloring(const std::string& spec) {
  if (spec == "constant") return {constant_coloring(), 1};
  if (spec == "parity") return {parity_coloring(), 2};
  if (spec.starts_with("residue:")) {
    Int m(spec.substr(8));
    return {residue_coloring(m), static_cast<int>(m.convert_to<long>())};
  }
  if (spec.starts_with("random:")) {
    const auto parts = split(spec.substr(7), ':');
    const auto seed = std::stoull(parts.at(0));
    const int colors = parts.size() > 1 ? std::stoi(parts[1]) : 2;
    return {seeded_random_coloring(seed, colors), colors};
  }
  if (spec.starts_with("file:")) {
    std::ifstream in(spec.substr(5));
    if (!in) throw std::invalid_argument("cannot open coloring file: " + spec.substr(5));
    json j = json::parse(in);
    auto table = std::make_shared<std::map<Int, int>>();
    int colors = 1;
    for (const auto& [key, value] : j.items()) {
      const int c = value.get<int>();
      (*table)[Int(key)] = c;
      colors = std::max(colors, c + 1);
    }
    return {[table](const Int& v) {
              const auto it = table->find(v);
              if (it == table->end()) {
                throw std::out_of_range("coloring map has no entry for " + v.str());
              }
              return it->second;
            },
            colors};
  }
  throw std::invalid_argument("unknown coloring spec: " + spec);
}

template <class T>
json blocks_json(const std::vector<IndexSet>& blocks, const std::vector<T>* terms) {
  json out = json::array();
  for (const auto& h : blocks) out.push_back(h.indices());
  (void)terms;
  return out;
}

template <class T>
json terms_json(const std::vector<T>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back(RingIO<T>::print(t));
  return out;
}

template <class T>
json verify_json(const VerifyReport<T>& report, const char* product_key) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"kind", v.kind}, {"value", RingIO<T>::print(v.value)}});
  }
  return {{"fs", report.sums_checked},
          {product_key, report.products_checked},
          {"violations", violations}};
}

struct CommonOpts {
  std::string ring = "gauss";
  std::string seq = "ones";
  Index seq_bound = 10000;
};

int run_divrem(const CommonOpts& opts, const std::string& xs, const std::string& zs) {
  if (opts.ring == "quat") {
    const auto [q, r] =
        q_right_divrem(parse_quaternion(xs), parse_quaternion(zs));
    emit({{"q", to_string(q)}, {"r", to_string(r)}});
  } else {
    const auto [q, r] = gi_divrem(parse_gaussian(xs), parse_gaussian(zs));
    emit({{"q", to_string(q)}, {"r", to_string(r)}});
  }
  return 0;
}

int run_cosets(const CommonOpts& opts, const std::string& zs) {
  json reps = json::array();
  if (opts.ring == "quat") {
    for (const auto& r : q_left_coset_reps(parse_quaternion(zs))) reps.push_back(to_string(r));
  } else {
    for (const auto& r : gi_coset_reps(parse_gaussian(zs))) reps.push_back(to_string(r));
  }
  emit({{"z", zs}, {"count", reps.size()}, {"reps", reps}});
  return 0;
}

template <class T>
int run_extract_t(const CommonOpts& opts, const std::string& zs, Index m,
                  ExtractStrategy strategy) {
  const auto x = make_seq<T>(opts.seq, opts.seq_bound);
  const T z = RingIO<T>::parse(zs);
  const auto h = extract_divisible_block(x, z, m, strategy);
  emit({{"z", zs},
        {"H", h.indices()},
        {"sum", RingIO<T>::print(x.sum_over(h))},
        {"strategy", strategy_name(strategy)}});
  return 0;
}

template <class T>
int run_union_extract_t(const std::vector<std::string>& seqs, Index seq_bound,
                        const std::string& zs, Index count, ExtractStrategy strategy) {
  std::vector<SequenceSource<T>> family;
  for (const auto& s : seqs) family.push_back(make_seq<T>(s, seq_bound));
  const T z = RingIO<T>::parse(zs);
  const auto blocks =
      common_divisible_blocks(std::span<const SequenceSource<T>>(family), z, count, strategy);
  json sums = json::array();
  for (const auto& f : family) {
    json row = json::array();
    for (const auto& k : blocks) row.push_back(RingIO<T>::print(f.sum_over(k)));
    sums.push_back(row);
  }
  emit({{"z", zs},
        {"blocks", blocks_json<T>(blocks, nullptr)},
        {"sums", sums},
        {"strategy", strategy_name(strategy)}});
  return 0;
}

template <class T>
int run_config_t(const std::string& kind, const std::string& terms_csv) {
  const auto terms = parse_terms<T>(terms_csv);
  const std::span<const T> sp(terms);
  std::vector<T> values;
  if (kind == "FS") {
    values = fs(sp);
  } else if (kind == "FP") {
    values = fp(sp);
  } else if (kind == "AP") {
    values = ap(sp);
  } else if (kind == "PS") {
    values = ps(sp);
  } else if (kind == "PP") {
    values = pp(sp);
  } else {
    throw std::invalid_argument("config kind must be FS, FP, AP, PS or PP");
  }
  emit({{"config", kind}, {"terms", terms_json(terms)}, {"values", terms_json(values)}});
  return 0;
}

struct BuildOpts {
  std::string set_text;
  std::string kind;  // fsfp | leftprod | fsap
  int depth = 3;
  BuildBounds bounds;
};

template <class T, class Build, class Verify>
int report_build(const SequenceSource<T>& x, const SetDescription<T>& set,
                 const BuildOpts& opts, const char* product_key, Build&& build,
                 Verify&& verify) {
  const auto result = build(x, set, opts.depth, opts.bounds);
  if (!result.found()) {
    emit({{"found", false},
          {"best_depth", result.best_depth},
          {"backtracks", result.backtracks_used},
          {"set", opts.set_text}});
    return 1;
  }
  const auto report = verify(*result.system, set);
  emit({{"blocks", blocks_json(result.system->blocks, &result.system->terms)},
        {"terms", terms_json(result.system->terms)},
        {"set", opts.set_text},
        {"verified", verify_json(report, product_key)}});
  return report.pass() ? 0 : 1;
}

int run_build(const CommonOpts& common, const BuildOpts& opts) {
  if (common.ring == "quat") {
    const auto set = parse_quaternion_set(opts.set_text);
    const auto y = make_seq<LipschitzQuat>(common.seq, common.seq_bound);
    if (opts.kind == "leftprod") {
      return report_build(y, set, opts, "leftprod",
                          [](auto&& a, auto&& b, int d, auto&& bb) {
                            return build_fs_leftprod(a, b, d, bb);
                          },
                          [](auto&& s, auto&& b) { return verify_fs_leftprod(s, b); });
    }
    if (opts.kind == "fsap" || opts.kind.empty()) {
      return report_build(y, set, opts, "ap",
                          [](auto&& a, auto&& b, int d, auto&& bb) {
                            return build_fs_ap(a, b, d, bb);
                          },
                          [](auto&& s, auto&& b) { return verify_fs_ap(s, b); });
    }
    throw std::invalid_argument("quaternion build kinds: leftprod, fsap");
  }
  if (!opts.kind.empty() && opts.kind != "fsfp") {
    throw std::invalid_argument("gaussian build kind: fsfp");
  }
  const auto set = parse_gaussian_set(opts.set_text);
  const auto x = make_seq<GaussianInt>(common.seq, common.seq_bound);
  return report_build(x, set, opts, "fp",
                      [](auto&& a, auto&& b, int d, auto&& bb) {
                        return build_fs_fp(a, b, d, bb);
                      },
                      [](auto&& s, auto&& b) { return verify_fs_fp(s, b); });
}

int run_verify(const CommonOpts& common, const std::string& set_text, const std::string& kind,
               const std::string& terms_csv) {
  if (common.ring == "quat") {
    const auto set = parse_quaternion_set(set_text);
    const auto terms = parse_terms<LipschitzQuat>(terms_csv);
    std::vector<IndexSet> blocks;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      blocks.push_back(IndexSet{static_cast<Index>(i + 1)});
    }
    const BlockSystem<LipschitzQuat> sys{blocks, terms};
    const auto report =
        kind == "leftprod" ? verify_fs_leftprod(sys, set) : verify_fs_ap(sys, set);
    emit({{"set", set_text},
          {"terms", terms_json(terms)},
          {"verified", verify_json(report, kind == "leftprod" ? "leftprod" : "ap")}});
    return report.pass() ? 0 : 1;
  }
  const auto set = parse_gaussian_set(set_text);
  const auto terms = parse_terms<GaussianInt>(terms_csv);
  std::vector<IndexSet> blocks;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    blocks.push_back(IndexSet{static_cast<Index>(i + 1)});
  }
  const BlockSystem<GaussianInt> sys{blocks, terms};
  const auto report = verify_fs_fp(sys, set);
  emit({{"set", set_text},
        {"terms", terms_json(terms)},
        {"verified", verify_json(report, "fp")}});
  return report.pass() ? 0 : 1;
}

template <class T>
int run_j_witness_t(const std::vector<std::string>& seqs, Index seq_bound,
                    const std::string& set_text, const SetDescription<T>& set, long radius,
                    Index hmax) {
  std::vector<SequenceSource<T>> family;
  for (const auto& s : seqs) family.push_back(make_seq<T>(s, seq_bound));
  const auto witness = find_j_witness(std::span<const SequenceSource<T>>(family), set,
                                      {.box_radius = radius, .h_max = hmax});
  if (!witness) {
    emit({{"found", false},
          {"set", set_text},
          {"box_radius", radius},
          {"h_max", hmax}});
    return 1;
  }
  emit({{"a", RingIO<T>::print(witness->a)}, {"H", witness->h.indices()}, {"set", set_text}});
  return 0;
}

int run_schur(int n, int colors) {
  const auto report = schur_search(n, colors, enum_cap());
  json j{{"n", report.n},
         {"colors", report.colors},
         {"forced", report.forced},
         {"colorings_checked", report.colorings_checked}};
  if (!report.forced) j["coloring"] = report.avoiding;
  emit(j);
  return 0;
}

int run_hindman(const std::string& ring, Index n, long radius, int k,
                const std::string& coloring_spec) {
  if (ring == "gauss") {
    std::function<int(const GaussianInt&)> color;
    if (coloring_spec == "constant") {
      color = [](const GaussianInt&) { return 0; };
    } else if (coloring_spec.starts_with("residue:")) {
      color = gaussian_residue_coloring(parse_gaussian(coloring_spec.substr(8)));
    } else {
      throw std::invalid_argument("gaussian colorings: constant, residue:Z");
    }
    const auto domain = gaussian_box(radius);
    const auto witness = hindman_search<GaussianInt>(domain, color, k);
    if (!witness) {
      emit({{"found", false}, {"k", k}, {"box_radius", radius}});
      return 1;
    }
    emit({{"terms", terms_json(witness->terms)},
          {"color", witness->color},
          {"fs", terms_json(witness->fs_values)}});
    return 0;
  }
  const auto [color, colors] = make_coloring(coloring_spec);
  std::vector<Int> domain;
  for (Index v = 1; v <= n; ++v) domain.push_back(Int(v));
  const auto witness = hindman_search<Int>(domain, color, k);
  if (!witness) {
    emit({{"found", false}, {"k", k}, {"n", n}, {"coloring", coloring_spec}});
    return 1;
  }
  emit({{"terms", terms_json(witness->terms)},
        {"color", witness->color},
        {"fs", terms_json(witness->fs_values)}});
  return 0;
}

int run_pspp(const std::string& terms_csv, Index n, const std::string& coloring_spec) {
  const auto [color, colors] = make_coloring(coloring_spec);
  const auto terms = parse_terms<Int>(terms_csv);
  const auto report = pspp_check(terms, color, Int(n));
  auto pairs = [](const std::vector<std::pair<Int, int>>& rows) {
    json out = json::array();
    for (const auto& [v, c] : rows) out.push_back({{"value", v.str()}, {"color", c}});
    return out;
  };
  json j{{"monochromatic", report.monochromatic},
         {"ps", pairs(report.ps_colors)},
         {"pp", pairs(report.pp_colors)}};
  if (report.monochromatic) j["color"] = report.color;
  emit(j);
  return report.monochromatic ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Ramsey-theory toolkit for Z[i] and the Lipschitz quaternions"};
  app.require_subcommand(1);
  app.add_flag("--jsonl", g_jsonl, "compact single-line JSON output");

  CommonOpts common;
  std::string xs, zs, set_text, kind, terms_csv, coloring_spec = "constant";
  std::string strategy_opt = "A";
  std::vector<std::string> seqs;
  Index m = 0, count = 1, n = 100, hmax = 6;
  long radius = 2;
  int k = 3, colors = 2, depth = 3;
  BuildOpts build_opts;

  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", common.ring, "gauss | quat | int")
        ->check(CLI::IsMember({"gauss", "quat", "int"}));
  };
  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--seq", common.seq,
                    "ones | zeros | natural | csv:... | file:PATH | random:SEED[:R] | "
                    "interleave:INNER");
    sub->add_option("--seq-bound", common.seq_bound, "evaluation bound for rule sequences");
  };

  auto* divrem = app.add_subcommand("divrem", "division with remainder");
  add_ring(divrem);
  divrem->add_option("--x", xs)->required();
  divrem->add_option("--z", zs)->required();

  auto* cosets = app.add_subcommand("cosets", "canonical coset transversal");
  add_ring(cosets);
  cosets->add_option("--z", zs)->required();

  auto* extract = app.add_subcommand("extract", "divisible-sum index block");
  add_ring(extract);
  add_seq(extract);
  extract->add_option("--z", zs)->required();
  extract->add_option("--m", m, "all indices must exceed m");
  extract->add_option("--strategy", strategy_opt)->check(CLI::IsMember({"A", "B"}));

  auto* unionx = app.add_subcommand("union-extract",
                                    "blocks with divisible sums for a family of sequences");
  add_ring(unionx);
  unionx->add_option("--seq", seqs, "sequence spec, repeatable")->required();
  unionx->add_option("--seq-bound", common.seq_bound);
  unionx->add_option("--z", zs)->required();
  unionx->add_option("--count", count, "number of output blocks");
  unionx->add_option("--strategy", strategy_opt)->check(CLI::IsMember({"A", "B"}));

  auto* config = app.add_subcommand("config", "finite configuration sets");
  add_ring(config);
  config->add_option("--kind", kind, "FS | FP | AP | PS | PP")->required();
  config->add_option("--terms", terms_csv, "comma-separated terms")->required();

  auto* build = app.add_subcommand("build", "greedy sum-subsystem construction");
  add_ring(build);
  add_seq(build);
  build->add_option("--set", build_opts.set_text, "set description text")->required();
  build->add_option("--depth", build_opts.depth)->required();
  build->add_option("--kind", build_opts.kind, "fsfp | leftprod | fsap");
  build->add_option("--blocks-per-level", build_opts.bounds.blocks_per_level);
  build->add_option("--backtracks", build_opts.bounds.backtracks);
  build->add_option("--threads", build_opts.bounds.threads);

  auto* verify = app.add_subcommand("verify", "re-verify terms against a set description");
  add_ring(verify);
  verify->add_option("--set", set_text)->required();
  verify->add_option("--terms", terms_csv)->required();
  verify->add_option("--kind", kind, "fsfp | leftprod | fsap");

  auto* jwitness = app.add_subcommand("j-witness", "search a + sum f(H) in A for a family");
  add_ring(jwitness);
  jwitness->add_option("--seq", seqs, "sequence spec, repeatable")->required();
  jwitness->add_option("--seq-bound", common.seq_bound);
  jwitness->add_option("--set", set_text)->required();
  jwitness->add_option("--radius", radius, "coordinate box radius for a");
  jwitness->add_option("--hmax", hmax, "H ranges over subsets of {1..hmax}");

  auto* schur = app.add_subcommand("schur", "exhaustive monochromatic x, y, x+y decision");
  schur->add_option("--n", n)->required();
  schur->add_option("--colors", colors);

  std::string hindman_ring = "int";
  auto* hindman = app.add_subcommand("hindman", "monochromatic FS witness search");
  hindman->add_option("--ring", hindman_ring, "int | gauss")
      ->check(CLI::IsMember({"int", "gauss"}));
  hindman->add_option("--n", n, "integer domain [1..n]");
  hindman->add_option("--radius", radius, "gaussian box radius (with --ring gauss)");
  hindman->add_option("--k", k, "witness length");
  hindman->add_option("--coloring", coloring_spec,
                      "constant | parity | residue:M | random:SEED:COLORS | file:PATH");

  auto* pspp = app.add_subcommand("pspp", "pairwise sums/products monochromaticity check");
  pspp->add_option("--terms", terms_csv)->required();
  pspp->add_option("--n", n, "coloring domain [1..n]");
  pspp->add_option("--coloring", coloring_spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  const auto strategy =
      strategy_opt == "B" ? ExtractStrategy::kEqualRemainder : ExtractStrategy::kPrefixSum;

  try {
    if (*divrem) return run_divrem(common, xs, zs);
    if (*cosets) return run_cosets(common, zs);
    if (*extract) {
      return common.ring == "quat"
                 ? run_extract_t<LipschitzQuat>(common, zs, m, strategy)
                 : run_extract_t<GaussianInt>(common, zs, m, strategy);
    }
    if (*unionx) {
      return common.ring == "quat"
                 ? run_union_extract_t<LipschitzQuat>(seqs, common.seq_bound, zs, count,
                                                      strategy)
                 : run_union_extract_t<GaussianInt>(seqs, common.seq_bound, zs, count,
                                                    strategy);
    }
    if (*config) {
      if (common.ring == "quat") return run_config_t<LipschitzQuat>(kind, terms_csv);
      if (common.ring == "gauss") return run_config_t<GaussianInt>(kind, terms_csv);
      return run_config_t<Int>(kind, terms_csv);
    }
    if (*build) return run_build(common, build_opts);
    if (*verify) return run_verify(common, set_text, kind, terms_csv);
    if (*jwitness) {
      if (common.ring == "quat") {
        return run_j_witness_t(seqs, common.seq_bound, set_text,
                               parse_quaternion_set(set_text), radius, hmax);
      }
      return run_j_witness_t(seqs, common.seq_bound, set_text, parse_gaussian_set(set_text),
                             radius, hmax);
    }
    if (*schur) return run_schur(static_cast<int>(n), colors);
    if (*hindman) return run_hindman(hindman_ring, n, radius, k, coloring_spec);
    if (*pspp) return run_pspp(terms_csv, n, coloring_spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
