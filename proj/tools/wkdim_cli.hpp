#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wkdim/wkdim.hpp"

namespace wkdim::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kInfeasible = 3 };

struct Input {
  std::string file;
  std::string family;
};

struct Loaded {
  Graph graph;
  Json descriptor;
};

inline Loaded load(const Input& in) {
  if (in.file.empty() == in.family.empty())
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --file or --family");
  Json desc;
  std::optional<Graph> g;
  if (!in.family.empty()) {
    auto spec = parse_family(in.family);
    g = generate(spec);
    desc["family"] = to_string(spec);
  } else {
    std::ifstream file(in.file);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + in.file + "'");
    g = read_edge_list(file);
    desc["file"] = in.file;
  }
  desc["vertices"] = g->vertex_count();
  desc["edges"] = g->edge_count();
  return {std::move(*g), std::move(desc)};
}

inline int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw Error(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

struct KRange {
  int first = 1;
  int last = 1;
};

/// "k" or "a..b", inclusive.
inline KRange parse_k_range(const std::string& text) {
  KRange range;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    range.first = range.last = parse_int(text, "k");
  } else {
    range.first = parse_int(std::string_view(text).substr(0, dots), "k");
    range.last = parse_int(std::string_view(text).substr(dots + 2), "k");
  }
  if (range.first < 1 || range.last < range.first)
    throw Error(ErrorCode::InvalidArgument, "k range '" + text + "' is empty or not positive");
  return range;
}

inline VertexSet read_set(std::istream& in) {
  VertexSet out;
  std::string token;
  while (in >> token) out.push_back(parse_int(token, "vertex id"));
  return out;
}

inline Json certificate_json(const Certificate& c) {
  return {{"a", to_string(c.a)}, {"b", to_string(c.b)}, {"delta", c.value}};
}

struct FormulaAnswer {
  int value = 0;
  VertexSet basis;
};

/// Closed-form answer for (g, k), or nothing when no formula covers the case.
inline std::optional<FormulaAnswer> try_formula(const Graph& g, int k) {
  try {
    if (g.family()) return FormulaAnswer{wdim_formula(*g.family(), k), formula_basis(g, k)};
    if (g.vertex_count() >= 2 && is_tree(g)) {
      auto shape = decompose_tree(g);
      return FormulaAnswer{wdim_formula(shape, k), formula_basis(g, shape, k)};
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::FormulaNotCovered) throw;
  }
  return std::nullopt;
}

struct WdimOptions {
  std::string k = "1";
  std::string variant = "vertex";
  std::string engine = "auto";
  int size_cap = kDefaultSizeCap;
  int workers = 1;
  std::string basis_out;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"wkdim: weak k-metric dimension toolkit"};
    app.require_subcommand(1);

    Input input;
    std::string format = "json";
    bool timing = false;
    auto add_common = [&](CLI::App* sub) {
      sub->add_option("--file", input.file, "edge-list file");
      sub->add_option("--family", input.family, "family spec, e.g. grid:6x4");
      sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
      sub->add_flag("--timing", timing, "report elapsed time");
    };

    WdimOptions opt;
    if (const char* env = std::getenv("WKDIM_WORKERS")) {
      try {
        opt.workers = std::max(1, parse_int(env, "WKDIM_WORKERS"));
      } catch (const Error&) {
        warnings_.push_back("ignoring malformed WKDIM_WORKERS");
      }
    }
    std::string set_file, kind = "weak", out_path;

    auto* kappa = app.add_subcommand("kappa", "kappa, kappa', witness pair and twin class");
    add_common(kappa);
    kappa->add_option("--variant", opt.variant, "vertex, edge or mixed");

    auto* wdim = app.add_subcommand("wdim", "weak k-metric dimension with a basis");
    add_common(wdim);
    wdim->add_option("--k", opt.k, "k or a..b");
    wdim->add_option("--variant", opt.variant, "vertex, edge or mixed");
    wdim->add_option("--engine", opt.engine, "auto, formula, brute or bnb")
        ->check(CLI::IsMember({"auto", "formula", "brute", "bnb"}));
    wdim->add_option("--size-cap", opt.size_cap, "vertex cap for the brute engine");
    wdim->add_option("--workers", opt.workers, "branch-and-bound threads");
    wdim->add_option("--basis-out", opt.basis_out, "write the basis as a set file (single k)");

    auto* verify = app.add_subcommand("verify", "check a vertex set at level k");
    add_common(verify);
    verify->add_option("--set", set_file, "set file, '-' for stdin")->required();
    verify->add_option("--k", opt.k, "k")->required();
    verify->add_option("--variant", opt.variant, "vertex, edge or mixed");
    verify->add_option("--kind", kind, "weak, strong or local")
        ->check(CLI::IsMember({"weak", "strong", "local"}));

    auto* lp = app.add_subcommand("export-lp", "write the covering model as CPLEX LP");
    add_common(lp);
    lp->add_option("--k", opt.k, "k")->required();
    lp->add_option("--variant", opt.variant, "vertex, edge or mixed");
    lp->add_option("--out", out_path, "output path, stdout if omitted");

    auto* gen = app.add_subcommand("gen", "write a family graph as an edge list");
    gen->add_option("--family", input.family, "family spec")->required();
    gen->add_option("--out", out_path, "output path, stdout if omitted");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
      Json report;
      int code = kOk;
      if (gen->parsed()) return run_gen(input, out_path);
      if (lp->parsed() && out_path.empty()) return run_lp(input, opt);

      auto loaded = load(input);
      report["input"] = loaded.descriptor;
      if (kappa->parsed()) {
        report["operation"] = "kappa";
        report["results"] = Json::array({kappa_result(loaded.graph, parse_variant(opt.variant))});
      } else if (wdim->parsed()) {
        report["operation"] = "wdim";
        report["results"] = wdim_results(loaded.graph, opt);
      } else if (verify->parsed()) {
        report["operation"] = "verify";
        auto result = verify_result(loaded.graph, opt, kind, set_file);
        if (!result["passed"].get<bool>()) code = kVerifyFailed;
        report["results"] = Json::array({result});
      } else {
        report["operation"] = "export-lp";
        report["results"] = Json::array({lp_result(loaded.graph, opt, out_path)});
      }
      report["warnings"] = warnings_;
      Json stats;
      stats["nodes"] = nodes_;
      stats["workers"] = opt.workers;
      if (timing) {
        auto elapsed = std::chrono::steady_clock::now() - start;
        stats["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(elapsed).count();
      }
      report["stats"] = stats;
      emit(report, format);
      return code;
    } catch (const InfeasibleK& e) {
      err_ << "error: " << e.what() << '\n';
      return kInfeasible;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return kInputError;
    }
  }

 private:
  Json kappa_result(const Graph& g, Variant variant) {
    Json r;
    r["variant"] = to_string(variant);
    if (variant == Variant::Vertex) {
      auto report = compute_kappa(g);
      r["kappa"] = report.kappa;
      r["kappa_prime"] = report.kappa_prime;
      r["witness"] = {report.witness_pair.first, report.witness_pair.second};
      r["kappa_prime_witness"] = {report.kappa_prime_pair.first, report.kappa_prime_pair.second};
      r["classification"] = to_string(report.classification);
      r["evidence"] = report.evidence;
      r["provenance"] = "exhaustive";
      if (report.weak3_readings_disagree)
        warnings_.push_back("the two readings of the weak-3 condition disagree on this graph");
      if (g.family()) {
        auto formula = kappa_formula(*g.family());
        r["formula_kappa"] = formula.value;
        if (formula.value != report.kappa)
          warnings_.push_back("closed-form kappa differs from the computed value");
      }
      return r;
    }
    auto profiles = pair_profiles(g, variant);
    if (!profiles.kappa) throw Error(ErrorCode::InvalidArgument, "fewer than two items");
    r["kappa"] = *profiles.kappa;
    r["witness"] = {to_string(profiles.pairs[profiles.kappa_pair].a),
                    to_string(profiles.pairs[profiles.kappa_pair].b)};
    r["provenance"] = "exhaustive";
    warnings_.push_back("kappa for the " + std::string(to_string(variant)) +
                        " variant is the minimum total difference over item pairs (extension)");
    return r;
  }

  Json wdim_results(const Graph& g, const WdimOptions& opt) {
    const Variant variant = parse_variant(opt.variant);
    auto range = parse_k_range(opt.k);
    const auto profiles = pair_profiles(g, variant);
    if (!profiles.kappa) throw Error(ErrorCode::InvalidArgument, "fewer than two items");
    const int kappa = *profiles.kappa;
    if (range.first > kappa)
      throw InfeasibleK(ErrorCode::KaboveKappa, range.first, kappa,
                        profiles.pair_label(profiles.kappa_pair));
    if (range.last > kappa) {
      warnings_.push_back("k range clipped to kappa = " + std::to_string(kappa));
      range.last = kappa;
    }
    if (!opt.basis_out.empty() && range.first != range.last)
      throw Error(ErrorCode::InvalidArgument, "--basis-out needs a single k");

    Json results = Json::array();
    for (int k = range.first; k <= range.last; ++k) {
      Json r;
      r["k"] = k;
      r["variant"] = to_string(variant);
      std::string provenance;
      std::string note;
      VertexSet basis;
      int value = 0;

      bool want_formula = opt.engine == "formula" || (opt.engine == "auto" && g.family());
      std::optional<FormulaAnswer> formula;
      if (want_formula && variant == Variant::Vertex) formula = try_formula(g, k);
      if (formula) {
        provenance = "formula";
        value = formula->value;
        basis = formula->basis;
      } else {
        if (want_formula) note = "solved, not formula";
        DimensionResult solved = opt.engine == "brute"
                                     ? solve_bruteforce(g, variant, k, opt.size_cap)
                                     : solve_bnb(g, variant, k, opt.workers);
        provenance = solved.stats.engine;
        value = solved.value;
        basis = solved.basis;
        nodes_ += solved.stats.nodes;
      }

      auto check = verify_variant(g, variant, basis, k);
      if (!check.passed || static_cast<int>(basis.size()) != value)
        throw std::logic_error("basis for k=" + std::to_string(k) + " failed re-verification");

      r["value"] = value;
      r["basis"] = basis;
      r["provenance"] = provenance;
      if (!note.empty()) r["note"] = note;
      r["certificate"] = certificate_json(check.weakest);
      results.push_back(r);

      if (!opt.basis_out.empty()) {
        std::ofstream file(opt.basis_out);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + opt.basis_out + "'");
        for (std::size_t i = 0; i < basis.size(); ++i) file << (i ? " " : "") << basis[i];
        file << '\n';
      }
    }
    return results;
  }

  Json verify_result(const Graph& g, const WdimOptions& opt, const std::string& kind,
                     const std::string& set_file) {
    const int k = parse_int(opt.k, "k");
    const Variant variant = parse_variant(opt.variant);
    VertexSet set;
    if (set_file == "-") {
      set = read_set(std::cin);
    } else {
      std::ifstream file(set_file);
      if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + set_file + "'");
      set = read_set(file);
    }
    set = normalize_set(g, set);

    Json r;
    r["k"] = k;
    r["variant"] = to_string(variant);
    r["kind"] = kind;
    r["set"] = set;
    if (kind != "weak" && variant != Variant::Vertex)
      throw Error(ErrorCode::InvalidArgument, "--kind " + kind + " only applies to vertices");
    if (variant != Variant::Vertex) {
      auto outcome = verify_variant(g, variant, set, k);
      r["passed"] = outcome.passed;
      if (!outcome.passed) r["failing_pair"] = certificate_json(outcome.weakest);
      return r;
    }
    VerifyOutcome outcome = kind == "weak"     ? verify_weak_k_resolving(g, set, k)
                            : kind == "strong" ? verify_k_resolving(g, set, k)
                                               : verify_local_k_resolving(g, set, k);
    r["passed"] = outcome.passed;
    if (!outcome.passed)
      r["failing_pair"] = {{"a", std::to_string(outcome.x)},
                           {"b", std::to_string(outcome.y)},
                           {"delta", outcome.value}};
    return r;
  }

  Json lp_result(const Graph& g, const WdimOptions& opt, const std::string& path) {
    const int k = parse_int(opt.k, "k");
    const auto profiles = pair_profiles(g, parse_variant(opt.variant));
    std::ofstream file(path);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    write_lp(file, profiles, k);
    return {{"k", k},
            {"variant", to_string(profiles.variant)},
            {"out", path},
            {"binaries", profiles.n},
            {"rows", profiles.pairs.size()}};
  }

  int run_lp(const Input& input, const WdimOptions& opt) {
    auto loaded = load(input);
    write_lp(out_, pair_profiles(loaded.graph, parse_variant(opt.variant)),
             parse_int(opt.k, "k"));
    return kOk;
  }

  int run_gen(const Input& input, const std::string& path) {
    auto g = generate(parse_family(input.family));
    if (path.empty()) {
      write_edge_list(out_, g);
      return kOk;
    }
    std::ofstream file(path);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    write_edge_list(file, g);
    return kOk;
  }

  void emit(const Json& report, const std::string& format) {
    if (format == "json") {
      out_ << report.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : report["input"].items()) out_ << key << ": " << value << '\n';
    for (const auto& r : report["results"]) {
      out_ << "--\n";
      for (const auto& [key, value] : r.items()) out_ << key << ": " << value.dump() << '\n';
    }
    for (const auto& w : report["warnings"]) out_ << "warning: " << w.get<std::string>() << '\n';
  }

  std::ostream& out_;
  std::ostream& err_;
  std::vector<std::string> warnings_;
  std::int64_t nodes_ = 0;
};

inline int run(int argc, char** argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return Runner(out, err).run(std::move(args));
}

}  // namespace wkdim::cli
