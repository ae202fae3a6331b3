#include "qcover/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "qcover/covers.hpp"
#include "qcover/error.hpp"
#include "qcover/families.hpp"
#include "qcover/gradedness.hpp"
#include "qcover/quasi_forest.hpp"
#include "qcover/serialize.hpp"

namespace qcover::cli {
namespace {

using nlohmann::json;

void attach_labels(const io::ParsedComplex& input, json& result) {
  if (!input.labels.empty()) result["labels"] = input.labels;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << content;
}

json facet_list(const SimplicialComplex& complex) { return complex.facets(); }

}  // namespace

std::string input_digest(const SimplicialComplex& complex) {
  const std::string canonical = io::write_json(complex);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(canonical.data(), canonical.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream hex;
  hex << "sha256:";
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

std::uint64_t search_budget() {
  if (const char* env = std::getenv("QCOVER_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) {
      throw Error(ErrorCode::InvalidArgument, std::string("QCOVER_BUDGET must be a positive integer, got '") + env + "'");
    }
    return value;
  }
  return kDefaultSearchBudget;
}

Outcome cmd_check(const io::ParsedComplex& input, const CheckOptions& options) {
  const SimplicialComplex& complex = input.complex;
  Outcome outcome;
  json& r = outcome.result;
  attach_labels(input, r);
  r["vertices"] = complex.vertex_count();
  r["facets"] = facet_list(complex);
  r["dimension"] = complex.dimension();

  const bool connected = is_connected(complex);
  const auto order = leaf_order(complex);
  r["connected"] = connected;
  r["quasi_forest"] = order.has_value();
  r["quasi_tree"] = connected && order.has_value();
  r["leaf_order"] = order ? to_json(*order) : json(nullptr);

  if (options.all_smd) {
    json sweep = json::array();
    for (const auto& finding : smd_sweep(complex, options.k_max)) {
      sweep.push_back({{"facets", to_json(finding.facets)}, {"verdict", to_json(finding.verdict)}});
    }
    r["smd_sweep"] = {{"k_max", options.k_max}, {"not_standard_graded", sweep}};
  }

  if (!(connected && order)) {
    r["verdict"] = nullptr;
    r["note"] = "not a quasi-tree: the special odd cycle criterion does not apply; "
                "`qcover dmax` gives a bound-limited answer";
    outcome.exit_code = kNotQuasiTree;
    return outcome;
  }

  const Verdict verdict = is_standard_graded(complex, BranchRule::smallest(), search_budget());
  r["verdict"] = to_json(verdict);
  outcome.exit_code = verdict.standard_graded ? kOk : kNotStandardGraded;
  return outcome;
}

Outcome cmd_covers(const io::ParsedComplex& input, const CoversOptions& options) {
  if (options.k < 0) throw Error(ErrorCode::InvalidArgument, "--k must be nonnegative");
  const auto covers = indecomposable_covers(input.complex, options.k);
  if (options.emit_golden) write_file(*options.emit_golden, golden_covers(covers));

  Outcome outcome;
  json list = json::array();
  for (const auto& c : covers) list.push_back(to_json(c));
  outcome.result = {{"k", options.k}, {"count", covers.size()}, {"covers", list}};
  attach_labels(input, outcome.result);
  return outcome;
}

Outcome cmd_dmax(const io::ParsedComplex& input, int k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "--k-max must be at least 1");
  Outcome outcome;
  outcome.result = to_json(d_max(input.complex, k_max));
  outcome.result["disclaimer"] = "d is the largest generator degree found in degrees 1.." + std::to_string(k_max) +
                                 "; higher degrees were not examined, so this is a lower bound, not a proof of d(A)";
  attach_labels(input, outcome.result);
  return outcome;
}

Outcome cmd_verify(const io::ParsedComplex& input, const VerifyOptions& options) {
  if (options.k_max < 2) throw Error(ErrorCode::InvalidArgument, "--k-max must be at least 2");
  const SimplicialComplex& complex = input.complex;
  const CrossValidation cv =
      cross_validate(complex, options.k_max, BranchRule::seeded(options.seed), search_budget());

  Outcome outcome;
  json& r = outcome.result;
  attach_labels(input, r);
  r["k_max"] = options.k_max;
  r["seed"] = options.seed;
  r["criterion"] = to_json(cv.criterion);
  r["brute_force"] = to_json(cv.brute_force);
  r["agree"] = cv.agree;
  r["standard_graded"] = cv.criterion.standard_graded;

  if (!cv.agree) {
    const std::filesystem::path path =
        options.artifact.value_or("qcover-disagreement-" + input_digest(complex).substr(7, 12) + ".json");
    json artifact = {{"facets", facet_list(complex)},
                     {"k_max", options.k_max},
                     {"seed", options.seed},
                     {"criterion", r["criterion"]},
                     {"brute_force", r["brute_force"]}};
    write_file(path, artifact.dump(2) + "\n");
    r["artifact"] = path.string();
    outcome.exit_code = kDisagreement;
  }
  return outcome;
}

SimplicialComplex cmd_gen(const GenOptions& options) {
  if (options.family == "delta-n") return delta_n(options.n);
  if (options.family == "figure1") return figure1();
  if (options.family == "random") {
    return random_quasi_tree(GeneratorSeed{options.seed, options.facets, options.max_size, options.max_vertices});
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown family '" + options.family + "' (expected delta-n, figure1 or random)");
}

std::string cmd_dot(const io::ParsedComplex& input, const DotOptions& options) {
  const SimplicialComplex& complex = input.complex;
  if (!is_quasi_tree(complex)) throw Error(ErrorCode::NotQuasiTree, "relation trees exist for quasi-trees only");
  LeafOrder order;
  if (options.order.empty()) {
    order = *leaf_order(complex);
  } else {
    for (int id : options.order) {
      if (id <= 0) throw Error(ErrorCode::UnknownFacetId, "facet ids start at 1");
      order.push_back(FacetId{static_cast<std::uint32_t>(id)});
    }
  }
  const RelationTree tree = relation_tree(complex, order, BranchRule::by_name(options.rule, options.seed));
  return to_dot(tree, complex, input.labels);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qcover: standard graded test for vertex cover algebras of quasi-trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string path;
  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Decide standard gradedness (exit 0 yes, 10 no, 11 not a quasi-tree)");
  check_cmd->add_option("file", path, "Complex in JSON or plain-text facet format")->required();
  check_cmd->add_flag("--all-smd", check.all_smd, "Also brute-force every subcomplex of maximal dimension");
  check_cmd->add_option("--k-max", check.k_max, "Degree bound for --all-smd")->capture_default_str();

  CoversOptions covers;
  std::string golden;
  auto* covers_cmd = app.add_subcommand("covers", "List the indecomposable k-covers");
  covers_cmd->add_option("file", path)->required();
  covers_cmd->add_option("--k", covers.k, "Cover order")->required();
  covers_cmd->add_option("--emit-golden", golden, "Also write the sorted list to this file");

  int dmax_k = 4;
  auto* dmax_cmd = app.add_subcommand("dmax", "Largest generator degree up to a bound");
  dmax_cmd->add_option("file", path)->required();
  dmax_cmd->add_option("--k-max", dmax_k, "Highest degree examined")->capture_default_str();

  VerifyOptions verify;
  std::string artifact;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the criterion against brute force (exit 20 on mismatch)");
  verify_cmd->add_option("file", path)->required();
  verify_cmd->add_option("--k-max", verify.k_max, "Highest degree examined by brute force")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for the random branch rule")->capture_default_str();
  verify_cmd->add_option("--artifact", artifact, "Where to write the report of a disagreement");

  GenOptions gen;
  std::string out_path;
  std::string format = "json";
  auto* gen_cmd = app.add_subcommand("gen", "Emit a named or random complex");
  gen_cmd->add_option("family", gen.family, "delta-n, figure1 or random")->required();
  gen_cmd->add_option("--n", gen.n, "n for delta-n")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed for random")->capture_default_str();
  gen_cmd->add_option("--facets", gen.facets, "Facet count for random")->capture_default_str();
  gen_cmd->add_option("--max-size", gen.max_size, "Largest facet size for random")->capture_default_str();
  gen_cmd->add_option("--max-vertices", gen.max_vertices, "Soft vertex cap for random (0 = none)");
  gen_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  gen_cmd->add_option("--out", out_path, "Output file (default stdout)");

  DotOptions dot;
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering of a relation tree");
  dot_cmd->add_option("file", path)->required();
  dot_cmd->add_option("--rule", dot.rule, "Branch rule: smallest, largest or random")->capture_default_str();
  dot_cmd->add_option("--seed", dot.seed, "Seed for the random rule");
  dot_cmd->add_option("--order", dot.order, "Leaf order as facet ids (default: greedy)")->delimiter(',');
  dot_cmd->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto emit_text = [&](const std::string& text) {
    if (out_path.empty()) {
      out << text;
    } else {
      write_file(out_path, text);
    }
  };

  try {
    if (*gen_cmd) {
      const SimplicialComplex complex = cmd_gen(gen);
      emit_text(format == "text" ? io::write_text(complex) : io::write_json(complex));
      return kOk;
    }

    const io::ParsedComplex input = io::read_complex_file(path);
    if (*dot_cmd) {
      emit_text(cmd_dot(input, dot));
      return kOk;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    std::string command;
    if (*check_cmd) {
      command = "check";
      outcome = cmd_check(input, check);
    } else if (*covers_cmd) {
      command = "covers";
      if (!golden.empty()) covers.emit_golden = golden;
      outcome = cmd_covers(input, covers);
    } else if (*dmax_cmd) {
      command = "dmax";
      outcome = cmd_dmax(input, dmax_k);
    } else {
      command = "verify";
      if (!artifact.empty()) verify.artifact = artifact;
      outcome = cmd_verify(input, verify);
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;

    json report = {{"tool", "qcover"},
                   {"version", kVersion},
                   {"command", command},
                   {"input_digest", input_digest(input.complex)},
                   {"result", outcome.result},
                   {"timing_ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
    out << report.dump(2) << "\n";
    return outcome.exit_code;
  } catch (const Error& e) {
    err << "qcover: " << e.what() << "\n";
    return e.code() == ErrorCode::NotQuasiTree ? kNotQuasiTree : kInputError;
  }
}

}  // namespace qcover::cli
