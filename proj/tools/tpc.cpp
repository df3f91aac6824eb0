// tpc: command-line front end for the ternary perfect-code library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 internal invariant failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tpc/canonical.hpp"
#include "tpc/classify.hpp"
#include "tpc/code.hpp"
#include "tpc/collection.hpp"
#include "tpc/concat.hpp"
#include "tpc/gf3.hpp"
#include "tpc/linalg.hpp"
#include "tpc/perfect.hpp"
#include "tpc/permgroup.hpp"
#include "tpc/rank1.hpp"
#include "tpc/sha256.hpp"

#ifndef TPC_VERSION
#define TPC_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tpc;

namespace {

struct Global {
  int threads = 1;
  std::string out_dir;
  std::string checkpoint_dir;
  uint64_t seed = 1;
  std::vector<std::string> command;
  std::vector<std::pair<std::string, std::string>> inputs;   // path, sha256
  std::vector<std::pair<std::string, std::string>> outputs;  // path, sha256
  int exit_code = 0;
};

std::string file_sha256(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_usage("cannot open " + path);
  Sha256 h;
  char buf[65536];
  while (in.read(buf, sizeof buf) || in.gcount() > 0)
    h.update(buf, size_t(in.gcount()));
  return hex_digest(h.finish());
}

void note_input(Global& g, const std::string& path) {
  g.inputs.push_back({path, file_sha256(path)});
}

void note_output(Global& g, const std::string& path) {
  g.outputs.push_back({path, file_sha256(path)});
}

// The manifest lands next to the artifacts; without --out-dir nothing is
// recorded (pure stdout runs need no provenance file).
void write_manifest(Global& g) {
  if (g.out_dir.empty() || g.outputs.empty()) return;
  json j;
  j["format"] = 1;
  j["tool"] = "tpc";
  j["version"] = TPC_VERSION;
  j["command"] = g.command;
  j["inputs"] = json::array();
  for (const auto& [p, d] : g.inputs) j["inputs"].push_back({{"path", p}, {"sha256", d}});
  j["outputs"] = json::array();
  for (const auto& [p, d] : g.outputs) j["outputs"].push_back({{"path", p}, {"sha256", d}});
  fs::create_directories(g.out_dir);
  fs::path mp = fs::path(g.out_dir) / "manifest.json";
  std::ofstream out(mp);
  if (!out) fail_usage("cannot write " + mp.string());
  out << j.dump(2) << '\n';
}

fs::path out_path(Global& g, const std::string& name) {
  if (g.out_dir.empty()) return fs::path(name);
  fs::create_directories(g.out_dir);
  return fs::path(g.out_dir) / name;
}

Code load_code(Global& g, const std::string& path) {
  note_input(g, path);
  return read_code_file(path);
}

Collection load_collection(Global& g, const std::string& path) {
  note_input(g, path);
  return read_collection_file(path);
}

bool is_collection_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_usage("cannot open " + path);
  std::string line;
  std::getline(in, line);
  return line.rfind("# collection", 0) == 0;
}

void emit_code(Global& g, const fs::path& path, const Code& c) {
  write_code_file(path.string(), c);
  note_output(g, path.string());
}

void emit_collection(Global& g, const fs::path& path, const Collection& col) {
  write_collection_file(path.string(), col);
  note_output(g, path.string());
}

void emit_text(Global& g, const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail_usage("cannot write " + path.string());
  out << text;
  out.close();
  note_output(g, path.string());
}

int kernel_dim(const Code& c) { return int(kernel(c).rank); }

// ---------------------------------------------------------------------------
// registries: one representative file per class plus an index.json

struct RegistryEntry {
  std::string digest;
  uint64_t aut_order = 0;
  std::vector<int> type_vector;
  uint64_t count = 0;
  std::string file;
};

json registry_index(const std::string& kind, int k,
                    const std::vector<RegistryEntry>& entries) {
  json j;
  j["format"] = 1;
  j["kind"] = kind;
  if (k > 0) j["k"] = k;
  j["classes"] = json::array();
  for (const RegistryEntry& e : entries)
    j["classes"].push_back({{"digest", e.digest},
                            {"aut_order", e.aut_order},
                            {"type_vector", e.type_vector},
                            {"count", e.count},
                            {"file", e.file}});
  return j;
}

void save_index(Global& g, const fs::path& dir, const json& j) {
  fs::create_directories(dir);
  fs::path p = dir / "index.json";
  std::ofstream out(p);
  if (!out) fail_usage("cannot write " + p.string());
  out << j.dump(2) << '\n';
  out.close();
  note_output(g, p.string());
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_gen_hamming(Global& g, int m, const std::string& out) {
  Code c = hamming_code(m);
  if (out.empty()) {
    write_code(std::cout, c);
  } else {
    fs::path p = out_path(g, out);
    emit_code(g, p, c);
    std::cout << "wrote " << p.string() << " (n=" << c.n() << " size=" << c.size() << ")\n";
  }
  return 0;
}

int cmd_verify(Global& g, const std::string& in, const std::string& expect) {
  Code c = load_code(g, in);
  bool ok = false;
  if (expect == "1perfect") {
    ok = is_1perfect(c);
  } else if (expect == "mds2") {
    ok = is_mds2(c);
  } else if (expect == "rmlike") {
    ok = is_rm_like(c, parity_mds(c.n()));
  } else {
    fail_usage("unknown property " + expect + " (1perfect|mds2|rmlike)");
  }
  std::cout << (ok ? "OK: " : "FAIL: ") << in << " " << expect << "\n";
  return ok ? 0 : 1;
}

int cmd_rank(Global& g, const std::string& in) {
  Code c = load_code(g, in);
  std::cout << "rank " << affine_rank(c) << "\n";
  return 0;
}

int cmd_kernel(Global& g, const std::string& in) {
  Code c = load_code(g, in);
  SpanInfo k = kernel(c);
  std::cout << "kernel_dim " << k.rank << "\n";
  std::cout << "kernel_order " << kernel_order(c) << "\n";
  return 0;
}

int cmd_canon(Global& g, const std::string& in, const std::string& flavor_s) {
  Flavor flavor = parse_flavor(flavor_s);
  CanonicalCertificate cert = is_collection_file(in)
                                  ? certificate(load_collection(g, in), flavor)
                                  : certificate(load_code(g, in), flavor);
  std::cout << "digest " << cert.digest << "\n";
  std::cout << "aut_order " << cert.aut_order.get_str() << "\n";
  return 0;
}

int cmd_orbit(Global& g, const std::string& in, const std::string& flavor_s) {
  Flavor flavor = parse_flavor(flavor_s);
  if (flavor == Flavor::strong)
    fail_usage("orbit sizes are defined for full, monomial and permutation flavors");
  int n = 0;
  CanonicalCertificate cert;
  if (is_collection_file(in)) {
    Collection col = load_collection(g, in);
    n = col.length();
    cert = certificate(col, flavor);
  } else {
    Code c = load_code(g, in);
    n = c.n();
    cert = certificate(c, flavor);
  }
  mpz_class group;
  mpz_fac_ui(group.get_mpz_t(), unsigned(n));
  mpz_class sym;
  int base = flavor == Flavor::full ? 6 : flavor == Flavor::monomial ? 2 : 1;
  mpz_ui_pow_ui(sym.get_mpz_t(), unsigned(base), unsigned(n));
  group *= sym;
  check(group % cert.aut_order == 0, "stabilizer order must divide the group order");
  std::cout << "digest " << cert.digest << "\n";
  std::cout << "aut_order " << cert.aut_order.get_str() << "\n";
  std::cout << "group_order " << group.get_str() << "\n";
  std::cout << "orbit_size " << mpz_class(group / cert.aut_order).get_str() << "\n";
  return 0;
}

int cmd_rank1_build(Global& g, int m, const std::string& assignment_file,
                    bool uniform, bool random, const std::string& out,
                    const std::string& emit_assignment) {
  int sources = int(!assignment_file.empty()) + int(uniform) + int(random);
  if (sources != 1)
    fail_usage("pick exactly one of --assignment, --uniform, --random");
  QuasigroupAssignment asg;
  if (!assignment_file.empty()) {
    note_input(g, assignment_file);
    std::ifstream in(assignment_file);
    if (!in) fail_usage("cannot open " + assignment_file);
    std::stringstream ss;
    ss << in.rdbuf();
    asg = QuasigroupAssignment::parse_json(ss.str());
    if (asg.m != m) fail_usage("assignment is for a different m");
  } else if (uniform) {
    asg = QuasigroupAssignment::uniform(m);
  } else {
    std::mt19937_64 rng(g.seed);
    asg = QuasigroupAssignment::random(m, rng);
  }
  Code c = rank1_build(m, asg);
  if (!emit_assignment.empty()) emit_text(g, out_path(g, emit_assignment), asg.to_json() + "\n");
  if (out.empty()) {
    write_code(std::cout, c);
  } else {
    fs::path p = out_path(g, out);
    emit_code(g, p, c);
    std::cout << "wrote " << p.string() << " (n=" << c.n() << " size=" << c.size() << ")\n";
  }
  return 0;
}

int cmd_rank1_count(int m) {
  std::cout << "fixed_span " << count_fixed_span(m).get_str() << "\n";
  std::cout << "all " << count_all(m).get_str() << "\n";
  std::cout << "classes_lower_bound " << count_classes_lower_bound(m).get_str() << "\n";
  return 0;
}

int cmd_switch_path(Global& g, int m, const std::string& from, const std::string& to) {
  Code c1 = load_code(g, from);
  Code c2 = load_code(g, to);
  std::vector<SwitchStep> path = switching_path(c1, c2, m);
  std::cout << "steps " << path.size() << "\n";
  for (size_t i = 0; i < path.size(); ++i) {
    const SwitchStep& s = path[i];
    std::cout << "step " << i << ": entry " << s.mu_index << " arg " << s.arg
              << " fix " << s.fixed_symbol << "\n";
    if (!g.out_dir.empty()) {
      char name[32];
      std::snprintf(name, sizeof name, "step-%03zu.txt", i + 1);
      emit_code(g, out_path(g, name), s.code);
    }
  }
  return 0;
}

int cmd_classify_rmlike(Global& g) {
  if (g.out_dir.empty()) fail_usage("classify rmlike needs --out-dir");
  RmLikeClasses rm = classify_rm_like();
  std::vector<RegistryEntry> entries;
  for (size_t t = 0; t < rm.full_reps.size(); ++t) {
    RegistryEntry e;
    e.digest = rm.full_digests[t];
    e.aut_order = rm.full_auts[t];
    e.type_vector = {int(t)};
    e.count = rm.class_codes_in_host[t];
    e.file = e.digest + ".txt";
    emit_code(g, out_path(g, e.file), rm.full_reps[t]);
    entries.push_back(std::move(e));
  }
  json idx = registry_index("rmlike", 0, entries);
  idx["codes_with_zero"] = rm.codes_with_zero;
  idx["codes_in_host"] = rm.codes_in_host;
  idx["monomial_aut_orders"] = rm.mon_auts;
  idx["permutation_aut_orders"] = rm.perm_auts;
  save_index(g, g.out_dir, idx);
  std::cout << "full_classes " << rm.full_reps.size() << "\n";
  std::cout << "monomial_classes " << rm.mon_auts.size() << "\n";
  std::cout << "permutation_classes " << rm.perm_auts.size() << "\n";
  std::cout << "codes_with_zero " << rm.codes_with_zero << "\n";
  std::cout << "codes_in_host " << rm.codes_in_host << "\n";
  return 0;
}

std::optional<CollectionClasses> load_collections_level(Global& g, const fs::path& dir,
                                                        int k) {
  fs::path p = dir / ("k" + std::to_string(k)) / "index.json";
  if (!fs::exists(p)) return std::nullopt;
  std::ifstream in(p);
  if (!in) fail_usage("cannot open " + p.string());
  json j = json::parse(in);
  if (j.value("format", 0) != 1 || j.value("kind", "") != "collections" ||
      j.value("k", 0) != k)
    fail_usage("not a collections level registry: " + p.string());
  note_input(g, p.string());
  CollectionClasses out;
  out.k = k;
  for (const json& e : j.at("classes")) {
    fs::path rep = p.parent_path() / e.at("file").get<std::string>();
    note_input(g, rep.string());
    out.reps.push_back(read_collection_file(rep.string()));
    out.digests.push_back(e.at("digest").get<std::string>());
    out.aut_orders.push_back(e.at("aut_order").get<uint64_t>());
    out.types.push_back(e.at("type_vector").get<std::vector<int>>());
    out.merged.push_back(e.at("count").get<uint64_t>());
  }
  std::map<std::vector<int>, uint64_t> by_type;
  for (const auto& ty : out.types) ++by_type[ty];
  out.by_type.assign(by_type.begin(), by_type.end());
  return out;
}

void save_collections_level(Global& g, const fs::path& dir, const CollectionClasses& c) {
  fs::path ldir = dir / ("k" + std::to_string(c.k));
  fs::create_directories(ldir);
  std::vector<RegistryEntry> entries;
  for (size_t i = 0; i < c.reps.size(); ++i) {
    RegistryEntry e;
    e.digest = c.digests[i];
    e.aut_order = c.aut_orders[i];
    e.type_vector = c.types[i];
    e.count = c.merged[i];
    e.file = e.digest + ".txt";
    emit_collection(g, ldir / e.file, c.reps[i]);
    entries.push_back(std::move(e));
  }
  save_index(g, ldir, registry_index("collections", c.k, entries));
}

int cmd_classify_collections(Global& g, int kmax) {
  if (g.out_dir.empty()) fail_usage("classify collections needs --out-dir");
  fs::path dir = g.checkpoint_dir.empty() ? fs::path(g.out_dir)
                                          : fs::path(g.checkpoint_dir);
  RmLikeClasses rm = classify_rm_like();
  std::vector<ClassOrbit> orbits;
  CollectionClasses prev;
  for (int k = 1; k <= kmax; ++k) {
    CollectionClasses cur;
    if (auto loaded = load_collections_level(g, dir, k)) {
      cur = std::move(*loaded);
      std::cout << "k " << k << ": " << cur.reps.size() << " classes (resumed)\n";
    } else {
      if (k == 1) {
        cur = collection_base(rm);
      } else {
        if (orbits.empty()) orbits = class_orbits(rm);
        cur = classify_collections_step(rm, orbits, prev);
      }
      save_collections_level(g, dir, cur);
      std::cout << "k " << k << ": " << cur.reps.size() << " classes\n";
    }
    prev = std::move(cur);
  }
  for (const auto& [ty, cnt] : prev.by_type) {
    std::cout << "type";
    for (int t : ty) std::cout << " " << t;
    std::cout << ": " << cnt << "\n";
  }
  return 0;
}

int cmd_classify_p4(Global& g) {
  if (g.out_dir.empty()) fail_usage("classify p4 needs --out-dir");
  P4Result r = classify_p4();
  std::vector<RegistryEntry> entries;
  for (size_t t = 0; t < r.class_reps.size(); ++t) {
    RegistryEntry e;
    e.digest = r.class_digests[t];
    e.aut_order = r.class_auts[t];
    e.count = r.class_sizes[t];
    e.file = e.digest + ".txt";
    emit_collection(g, out_path(g, e.file), r.class_reps[t]);
    entries.push_back(std::move(e));
  }
  json idx = registry_index("p4", 0, entries);
  idx["codes"] = r.codes.size();
  idx["partitions"] = r.partitions.size();
  save_index(g, g.out_dir, idx);
  std::cout << "codes " << r.codes.size() << "\n";
  std::cout << "partitions " << r.partitions.size() << "\n";
  std::cout << "classes " << r.class_reps.size() << "\n";
  for (size_t t = 0; t < r.class_reps.size(); ++t)
    std::cout << "class " << t << ": size " << r.class_sizes[t] << " aut_order "
              << r.class_auts[t] << "\n";
  return 0;
}

int cmd_concat_build(Global& g, const std::string& cbar_f, const std::string& pbar_f,
                     const std::string& tau_s, const std::string& out) {
  Collection cbar = load_collection(g, cbar_f);
  Collection pbar = load_collection(g, pbar_f);
  Perm tau = parse_perm(tau_s, 9);
  Code d = build_concatenated(cbar, pbar, tau);
  if (out.empty()) {
    write_code(std::cout, d);
  } else {
    fs::path p = out_path(g, out);
    emit_code(g, p, d);
    std::cout << "wrote " << p.string() << " (n=" << d.n() << " size=" << d.size() << ")\n";
  }
  return 0;
}

int cmd_concat_reduce(Global& g, const std::string& cbar_f, const std::string& pbar_f,
                      bool build) {
  if (build && g.out_dir.empty()) fail_usage("--build needs --out-dir");
  Collection cbar = load_collection(g, cbar_f);
  Collection pbar = load_collection(g, pbar_f);
  std::vector<Perm> taus = reduced_taus(cbar, pbar);
  std::cout << "reduced_taus " << taus.size() << "\n";
  std::string text;
  for (const Perm& t : taus) text += perm_str(t) + "\n";
  if (g.out_dir.empty()) {
    std::cout << text;
    return 0;
  }
  emit_text(g, out_path(g, "taus.txt"), text);
  if (build)
    for (size_t i = 0; i < taus.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "concat-%05zu.txt", i);
      emit_code(g, out_path(g, name), build_concatenated(cbar, pbar, taus[i]));
    }
  return 0;
}

int cmd_concat_supports(Global& g, const std::string& in) {
  Code c = load_code(g, in);
  std::vector<ConcatStructure> st = concat_supports(c);
  std::cout << "supports " << st.size() << "\n";
  for (const ConcatStructure& s : st) {
    std::cout << "support";
    for (int i : s.support) std::cout << " " << i;
    std::cout << "\n";
  }
  std::cout << (st.empty() ? "not concatenated"
                           : st.size() == 1 ? "uni-concatenated" : "multi-concatenated")
            << "\n";
  return 0;
}

int cmd_concat_tabulate(Global& g, std::vector<std::string> files,
                        const std::string& dir, const std::string& out) {
  if (!dir.empty()) {
    std::vector<std::string> found;
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".txt" && !is_collection_file(e.path().string()))
        found.push_back(e.path().string());
    std::sort(found.begin(), found.end());
    files.insert(files.end(), found.begin(), found.end());
  }
  if (files.empty()) fail_usage("concat tabulate needs --in files or --dir");

  uint64_t table[3][8] = {};
  std::map<mpz_class, uint64_t> aut_counts;
  for (const std::string& f : files) {
    Code c = load_code(g, f);
    if (c.n() != 13) fail_usage(f + ": expected length 13");
    int r = affine_rank(c);
    int kd = kernel_dim(c);
    check(r >= 10 && r <= 12, f + ": rank outside the concatenated range");
    check(kd >= 3 && kd <= 10, f + ": kernel dimension outside the admissible range");
    check(r != 10 || kd == 10, f + ": rank 10 forces a full kernel");
    check(r != 11 || (kd >= 4 && kd <= 9), f + ": rank 11 forces kernel dimension 4..9");
    check(r != 12 || kd <= 8, f + ": rank 12 forces kernel dimension at most 8");
    ++table[r - 10][kd - 3];
    ++aut_counts[certificate(c, Flavor::full).aut_order];
  }

  std::ostringstream csv;
  csv << "dim(kernel),3,4,5,6,7,8,9,10,3-10\n";
  uint64_t col[8] = {}, grand = 0;
  for (int r = 0; r < 3; ++r) {
    uint64_t row = 0;
    csv << "rank " << r + 10;
    for (int kd = 0; kd < 8; ++kd) {
      csv << "," << table[r][kd];
      row += table[r][kd];
      col[kd] += table[r][kd];
    }
    csv << "," << row << "\n";
    grand += row;
  }
  csv << "rank 10-12";
  for (int kd = 0; kd < 8; ++kd) csv << "," << col[kd];
  csv << "," << grand << "\n";
  csv << "\naut_order,count\n";
  for (const auto& [a, cnt] : aut_counts) csv << a.get_str() << "," << cnt << "\n";

  if (out.empty()) {
    std::cout << csv.str();
  } else {
    fs::path p = out_path(g, out);
    emit_text(g, p, csv.str());
    std::cout << "wrote " << p.string() << "\n";
  }
  return 0;
}

std::vector<Perm> read_perm_file(Global& g, const std::string& path, int degree) {
  note_input(g, path);
  std::ifstream in(path);
  if (!in) fail_usage("cannot open " + path);
  std::vector<Perm> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_perm(line, degree));
  }
  if (out.empty()) fail_usage("no permutations in " + path);
  return out;
}

int cmd_dcosets(Global& g, const std::string& left_f, const std::string& right_f) {
  PermGroup left = closure(read_perm_file(g, left_f, 9), 9);
  PermGroup right = closure(read_perm_file(g, right_f, 9), 9);
  std::vector<DoubleCoset> dc = double_coset_reps(left, right);
  std::cout << "left_order " << left.order() << "\n";
  std::cout << "right_order " << right.order() << "\n";
  std::cout << "double_cosets " << dc.size() << "\n";
  std::string text;
  for (const DoubleCoset& d : dc) {
    std::cout << perm_str(d.rep) << "  size " << d.size << "\n";
    text += perm_str(d.rep) + "\n";
  }
  if (!g.out_dir.empty()) emit_text(g, out_path(g, "dcosets.txt"), text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Global g;
  for (int i = 0; i < argc; ++i) g.command.push_back(argv[i]);

  CLI::App app{"ternary perfect-code toolkit"};
  app.require_subcommand(1);
  app.add_option("--threads", g.threads, "worker threads (never changes output)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out-dir", g.out_dir, "directory for artifacts and the run manifest");
  app.add_option("--checkpoint-dir", g.checkpoint_dir,
                 "directory for resumable batch state (defaults to --out-dir)");
  app.add_option("--seed", g.seed, "seed for randomized constructions");

  int m = 3;
  std::string in, out, expect, flavor = "full";
  std::string assignment_file, emit_assignment;
  bool uniform = false, random = false, build = false;
  std::string from, to, cbar_f, pbar_f, tau_s, dir_opt, left_f, right_f;
  std::vector<std::string> in_files;
  int kmax = 2;

  CLI::App* gen = app.add_subcommand("gen-hamming", "write the Hamming code of length (3^m-1)/2");
  gen->add_option("--m", m, "parameter m")->required()->check(CLI::Range(1, 3));
  gen->add_option("--out", out, "output code file");
  gen->callback([&] { g.exit_code = cmd_gen_hamming(g, m, out); });

  CLI::App* ver = app.add_subcommand("verify", "check a stored code against a property");
  ver->add_option("--in", in, "code file")->required();
  ver->add_option("--expect", expect, "1perfect|mds2|rmlike")->required();
  ver->callback([&] { g.exit_code = cmd_verify(g, in, expect); });

  CLI::App* rnk = app.add_subcommand("rank", "affine rank of a stored code");
  rnk->add_option("--in", in, "code file")->required();
  rnk->callback([&] { g.exit_code = cmd_rank(g, in); });

  CLI::App* ker = app.add_subcommand("kernel", "kernel dimension of a stored code");
  ker->add_option("--in", in, "code file")->required();
  ker->callback([&] { g.exit_code = cmd_kernel(g, in); });

  CLI::App* can = app.add_subcommand("canon", "canonical digest and automorphism order");
  can->add_option("--in", in, "code or collection file")->required();
  can->add_option("--flavor", flavor, "full|monomial|permutation|strong");
  can->callback([&] { g.exit_code = cmd_canon(g, in, flavor); });

  CLI::App* orb = app.add_subcommand("orbit", "equivalence-orbit size of a stored object");
  orb->add_option("--in", in, "code or collection file")->required();
  orb->add_option("--flavor", flavor, "full|monomial|permutation");
  orb->callback([&] { g.exit_code = cmd_orbit(g, in, flavor); });

  CLI::App* r1b = app.add_subcommand("rank1-build", "build a code from a quasigroup assignment");
  r1b->add_option("--m", m, "parameter m")->required()->check(CLI::Range(2, 3));
  r1b->add_option("--assignment", assignment_file, "assignment JSON file");
  r1b->add_flag("--uniform", uniform, "use the all-identical assignment");
  r1b->add_flag("--random", random, "draw the assignment from --seed");
  r1b->add_option("--out", out, "output code file");
  r1b->add_option("--emit-assignment", emit_assignment, "also write the assignment JSON");
  r1b->callback([&] {
    g.exit_code = cmd_rank1_build(g, m, assignment_file, uniform, random, out, emit_assignment);
  });

  CLI::App* r1c = app.add_subcommand("rank1-count", "exact counts of quasigroup-built codes");
  r1c->add_option("--m", m, "parameter m")->required()->check(CLI::Range(2, 4));
  r1c->callback([&] { g.exit_code = cmd_rank1_count(m); });

  CLI::App* swp = app.add_subcommand("switch-path", "two-coordinate switching path between two codes");
  swp->add_option("--m", m, "parameter m")->required()->check(CLI::Range(2, 3));
  swp->add_option("--from", from, "start code file")->required();
  swp->add_option("--to", to, "target code file")->required();
  swp->callback([&] { g.exit_code = cmd_switch_path(g, m, from, to); });

  CLI::App* cls = app.add_subcommand("classify", "exhaustive classifications");
  cls->require_subcommand(1);
  CLI::App* rml = cls->add_subcommand("rmlike", "tiling subcodes of the length-9 MDS host");
  rml->callback([&] { g.exit_code = cmd_classify_rmlike(g); });
  CLI::App* col = cls->add_subcommand("collections", "disjoint k-tuples of tiling codes");
  col->add_option("--k", kmax, "largest collection size")->required()->check(CLI::Range(1, 9));
  col->callback([&] { g.exit_code = cmd_classify_collections(g, kmax); });
  CLI::App* p4c = cls->add_subcommand("p4", "length-4 perfect codes and partitions");
  p4c->callback([&] { g.exit_code = cmd_classify_p4(g); });

  CLI::App* cc = app.add_subcommand("concat", "length-13 concatenation constructions");
  cc->require_subcommand(1);
  CLI::App* cb = cc->add_subcommand("build", "concatenate two partitions along a pairing");
  cb->add_option("--cbar", cbar_f, "inner partition collection file")->required();
  cb->add_option("--pbar", pbar_f, "outer partition collection file")->required();
  cb->add_option("--tau", tau_s, "pairing permutation, e.g. \"0 1 2 3 4 5 6 7 8\"")->required();
  cb->add_option("--out", out, "output code file");
  cb->callback([&] { g.exit_code = cmd_concat_build(g, cbar_f, pbar_f, tau_s, out); });
  CLI::App* cr = cc->add_subcommand("reduce", "double-coset representatives of the pairings");
  cr->add_option("--cbar", cbar_f, "inner partition collection file")->required();
  cr->add_option("--pbar", pbar_f, "outer partition collection file")->required();
  cr->add_flag("--build", build, "also write one code per representative");
  cr->callback([&] { g.exit_code = cmd_concat_reduce(g, cbar_f, pbar_f, build); });
  CLI::App* cs = cc->add_subcommand("supports", "all concatenation supports of a code");
  cs->add_option("--in", in, "code file")->required();
  cs->callback([&] { g.exit_code = cmd_concat_supports(g, in); });
  CLI::App* ct = cc->add_subcommand("tabulate", "rank/kernel and aut-order tables as CSV");
  ct->add_option("--in", in_files, "code files");
  ct->add_option("--dir", dir_opt, "directory of code files");
  ct->add_option("--out", out, "output CSV file");
  ct->callback([&] { g.exit_code = cmd_concat_tabulate(g, in_files, dir_opt, out); });

  CLI::App* dco = app.add_subcommand("dcosets", "double cosets of two permutation groups");
  dco->add_option("--left", left_f, "generators file, one permutation per line")->required();
  dco->add_option("--right", right_f, "generators file")->required();
  dco->callback([&] { g.exit_code = cmd_dcosets(g, left_f, right_f); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  try {
    write_manifest(g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return g.exit_code;
}
