/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

// uqc — command-line front end.
//
// Verbs:
//   check FILE       verdict + extremality report as deterministic JSON
//   sample D COUNT   write feasible coefficient documents
//   catalog [NAME]   dump named reference objects as documents
//   conjugate A U    conjugate the channel in A by the unitary in U
//
// Exit codes: 0 extreme (or comparison equal), 2 input error, 3 valid but
// not extreme (or comparison different), 4 semantic failure (not unital /
// not trace-preserving, infeasible coefficients, non-unitary conjugator,
// sampler non-convergence).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "uqc/catalog.hpp"
#include "uqc/channel.hpp"
#include "uqc/documents.hpp"
#include "uqc/extremality.hpp"
#include "uqc/matrix.hpp"
#include "uqc/weyl_family.hpp"

namespace {

using nlohmann::ordered_json;
using namespace uqc;

constexpr const char* kToolVersion = "1.0.0";
constexpr int kExitExtreme = 0;
constexpr int kExitEqual = 0;
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotExtreme = 3;
constexpr int kExitDifferent = 3;
constexpr int kExitInvalid = 4;

double round_digits(double value, int digits) {
  if (digits < 0) return value;
  const double scale = std::pow(10.0, digits);
  const double rounded = std::round(value * scale) / scale;
  return rounded == 0.0 ? 0.0 : rounded;  // normalize -0
}

std::string method_name(ExtremalityMethod method) {
  switch (method) {
    case ExtremalityMethod::general_ls:
      return "general_ls";
    case ExtremalityMethod::general_ucp:
      return "general_ucp";
    case ExtremalityMethod::general_cpt:
      return "general_cpt";
    case ExtremalityMethod::family_rank_d:
      return "family_rank_d";
    case ExtremalityMethod::family_rank4:
      return "family_rank4";
  }
  return "unknown";
}

ordered_json policy_to_json(const RankPolicy& policy) {
  ordered_json j;
  j["relative_tol"] = policy.relative_tol;
  j["absolute_floor"] = policy.absolute_floor;
  return j;
}

ordered_json extremality_to_json(const ExtremalityReport& report, int digits) {
  ordered_json j;
  j["method"] = method_name(report.method);
  j["extreme"] = report.extreme;
  ordered_json blocks = ordered_json::array();
  for (const BlockReport& block : report.blocks) {
    ordered_json b;
    b["label"] = block.label;
    ordered_json sv = ordered_json::array();
    for (double v : block.singular_values)
      sv.push_back(round_digits(v, digits));
    b["singular_values"] = std::move(sv);
    b["full_rank"] = block.full_rank;
    b["mirrored"] = block.mirrored;
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  if (report.method == ExtremalityMethod::general_ls ||
      report.method == ExtremalityMethod::general_ucp ||
      report.method == ExtremalityMethod::general_cpt) {
    ordered_json ind;
    ind["independent"] = report.independence.independent;
    ind["rank"] = report.independence.rank;
    ind["set_size"] = report.independence.set_size;
    ind["min_gram_eigenvalue"] = report.independence.min_gram_eigenvalue;
    j["independence"] = std::move(ind);
  }
  return j;
}

void emit(const ordered_json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  std::fwrite(text.data(), 1, text.size(), stdout);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DocumentError("cannot write '" + out_path + "'", 0, 0);
    out << text;
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  std::fwrite(text.data(), 1, text.size(), stdout);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DocumentError("cannot write '" + out_path + "'", 0, 0);
    out << text;
  }
}

struct CheckOptions {
  std::string path;
  std::string family;     // empty = document's (default rank_d)
  std::string method = "both";
  double tolerance = 1e-9;
  int digits = -1;
  std::string out;
  std::string same_channel;
};

int run_check(const CheckOptions& opt) {
  const InputDocument doc = load_document(opt.path);

  DocumentFamily family = doc.family;
  if (!opt.family.empty()) {
    family = (opt.family == "rank_d") ? DocumentFamily::rank_d
                                      : DocumentFamily::rank4_qutrit;
  }
  if (family == DocumentFamily::none) family = DocumentFamily::rank_d;

  const bool has_coefficients = doc.kind == DocumentKind::coefficients;
  if (!has_coefficients && opt.method == "family")
    throw DocumentError(
        "--method family requires a coefficients document", 0, 0);

  ordered_json report;
  report["schema_version"] = 1;
  report["tool_version"] = kToolVersion;
  report["command"] = "check";
  {
    ordered_json input;
    input["path"] = opt.path;
    input["document"] = ordered_json::parse(serialize_document(doc));
    report["input"] = std::move(input);
  }
  report["policy"] = policy_to_json(RankPolicy{});
  report["tolerance"] = opt.tolerance;

  std::optional<CoefficientMatrix> coeffs;
  KrausChannel channel = [&] {
    if (!has_coefficients) return doc.channel();
    coeffs = doc.coefficients();
    return family == DocumentFamily::rank4_qutrit ? build_rank4_qutrit(*coeffs)
                                                  : build_rank_d(*coeffs);
  }();

  if (coeffs) {
    const ConditionReport conditions = condition_report(*coeffs);
    ordered_json c;
    c["norm_residual"] = conditions.norm_residual;
    ordered_json tp = ordered_json::array();
    for (const cxd& z : conditions.tp_residuals) tp.push_back(std::abs(z));
    c["tp_residuals"] = std::move(tp);
    ordered_json uni = ordered_json::array();
    for (const cxd& z : conditions.unital_residuals)
      uni.push_back(std::abs(z));
    c["unital_residuals"] = std::move(uni);
    c["max_residual"] = conditions.max_residual();
    report["conditions"] = std::move(c);
  }

  const ChannelVerdict v = verdict(channel, opt.tolerance);
  {
    ordered_json j;
    j["trace_preserving"] = v.trace_preserving;
    j["unital"] = v.unital;
    j["tp_residual"] = v.tp_residual;
    j["unital_residual"] = v.unital_residual;
    report["verdict"] = std::move(j);
  }

  int exit_code = kExitOk;

  if (!opt.same_channel.empty()) {
    const KrausChannel other = load_document(opt.same_channel).channel();
    const double dist = choi_distance(channel, other);
    const bool equal = dist <= opt.tolerance;
    ordered_json cmp;
    cmp["other_path"] = opt.same_channel;
    cmp["choi_distance"] = dist;
    cmp["tolerance"] = opt.tolerance;
    cmp["equal"] = equal;
    report["comparison"] = std::move(cmp);
    exit_code = equal ? kExitEqual : kExitDifferent;
  } else if (!v.trace_preserving || !v.unital) {
    exit_code = kExitInvalid;
  } else {
    ordered_json methods = ordered_json::array();
    std::vector<bool> verdicts;
    try {
      if (coeffs && (opt.method == "family" || opt.method == "both")) {
        const ExtremalityReport r = family == DocumentFamily::rank4_qutrit
                                        ? extreme_family_rank4(*coeffs)
                                        : extreme_family_rank_d(*coeffs);
        verdicts.push_back(r.extreme);
        methods.push_back(extremality_to_json(r, opt.digits));
      }
      if (opt.method == "general" || opt.method == "both" || !coeffs) {
        const ExtremalityReport r = extreme_general(channel);
        verdicts.push_back(r.extreme);
        methods.push_back(extremality_to_json(r, opt.digits));
      }
      report["extremality"] = std::move(methods);
      if (verdicts.size() > 1) {
        bool agree = true;
        for (bool b : verdicts) agree = agree && (b == verdicts.front());
        report["methods_agree"] = agree;
      } else {
        report["methods_agree"] = nullptr;
      }
      const bool extreme =
          !verdicts.empty() && std::find(verdicts.begin(), verdicts.end(),
                                         false) == verdicts.end();
      exit_code = extreme ? kExitExtreme : kExitNotExtreme;
    } catch (const std::invalid_argument& e) {
      report["extremality"] = std::move(methods);
      report["methods_agree"] = nullptr;
      report["error"] = e.what();
      exit_code = kExitInvalid;
    }
  }

  report["exit_code"] = exit_code;
  emit(report, opt.out);
  return exit_code;
}

struct SampleOptions {
  std::size_t d = 3;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::string out = ".";
};

int run_sample(const SampleOptions& opt) {
  std::filesystem::create_directories(opt.out);
  for (std::size_t i = 0; i < opt.count; ++i) {
    const CoefficientMatrix c = sample_feasible(opt.d, opt.seed + i);
    char name[64];
    std::snprintf(name, sizeof(name), "sample_d%zu_seed%llu_%03zu.json",
                  opt.d, static_cast<unsigned long long>(opt.seed), i);
    const std::filesystem::path path = std::filesystem::path(opt.out) / name;
    save_document(document_from_coefficients(c, DocumentFamily::rank_d),
                  path.string());
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

int run_catalog(const std::string& name, const std::string& out) {
  if (!name.empty()) {
    const NamedExample* entry = find_example(name);
    if (entry == nullptr)
      throw DocumentError("unknown catalog entry '" + name + "'", 0, 0);
    emit_text(serialize_document(document_from_catalog(*entry)), out);
    return kExitOk;
  }
  ordered_json root;
  for (const NamedExample& entry : catalog_entries())
    root[entry.name] =
        ordered_json::parse(serialize_document(document_from_catalog(entry)));
  emit_text(root.dump(2) + "\n", out);
  return kExitOk;
}

int run_conjugate(const std::string& path, const std::string& unitary_path,
                  const std::string& out) {
  const InputDocument doc = load_document(path);
  const InputDocument u_doc = load_document(unitary_path);
  if (u_doc.kind != DocumentKind::kraus || u_doc.matrices.size() != 1)
    throw DocumentError(
        "conjugate: the unitary document must be a Kraus document holding "
        "exactly one matrix",
        0, 0);
  const KrausChannel result = conjugate(doc.channel(), u_doc.matrices.front());
  emit_text(serialize_document(document_from_channel(result)), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unital-channel toolkit: build parametrized Kraus families, "
               "verify validity conditions, decide extremality"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand(
      "check", "Verdict and extremality report for a document");
  check->add_option("file", check_opt.path, "Input document")->required();
  check->add_option("--family", check_opt.family,
                    "Family builder for coefficient documents")
      ->check(CLI::IsMember({"rank_d", "rank4", "rank4_qutrit"}));
  check->add_option("--method", check_opt.method,
                    "Extremality method(s) to run")
      ->check(CLI::IsMember({"general", "family", "both"}));
  check->add_option("--tolerance", check_opt.tolerance,
                    "Verdict and comparison tolerance");
  check->add_option("--digits", check_opt.digits,
                    "Round reported singular values to N digits");
  check->add_option("--out", check_opt.out, "Also write the report here");
  check->add_option("--same-channel", check_opt.same_channel,
                    "Compare against the channel in this document");

  SampleOptions sample_opt;
  CLI::App* sample = app.add_subcommand(
      "sample", "Sample feasible coefficient matrices");
  sample->add_option("d", sample_opt.d, "Dimension")->required();
  sample->add_option("count", sample_opt.count, "Number of samples")
      ->required();
  sample->add_option("--seed", sample_opt.seed, "Base random seed")
      ->required();
  sample->add_option("--out", sample_opt.out, "Output directory");

  std::string catalog_name;
  std::string catalog_out;
  CLI::App* catalog = app.add_subcommand(
      "catalog", "Dump named reference objects as documents");
  catalog->add_option("name", catalog_name, "Entry name (all when omitted)");
  catalog->add_option("--out", catalog_out, "Also write the document here");

  std::string conj_path, conj_unitary, conj_out;
  CLI::App* conj = app.add_subcommand(
      "conjugate", "Conjugate the channel in FILE by the unitary in UNITARY");
  conj->add_option("file", conj_path, "Channel document")->required();
  conj->add_option("unitary", conj_unitary,
                   "Single-matrix Kraus document holding the unitary")
      ->required();
  conj->add_option("--out", conj_out, "Also write the document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (check->parsed()) return run_check(check_opt);
    if (sample->parsed()) return run_sample(sample_opt);
    if (catalog->parsed()) return run_catalog(catalog_name, catalog_out);
    if (conj->parsed()) return run_conjugate(conj_path, conj_unitary, conj_out);
  } catch (const DocumentError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInput;
}
