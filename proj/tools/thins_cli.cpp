// Copyright 2026 The thins Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end.  Exit codes: 0 everything verified, 1 a check
// found a counterexample or failed, 2 bad input or usage.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thins/abstract.hpp"
#include "thins/enumerate.hpp"
#include "thins/general.hpp"
#include "thins/io.hpp"
#include "thins/per.hpp"
#include "thins/poset.hpp"
#include "thins/rel.hpp"
#include "thins/suite.hpp"

namespace {

using namespace thins;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
}

// JSON files hold the object encoding; anything else is the 0/1 grid.
Rel read_rel_file(const std::string& path) {
  std::string text = slurp(path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    return rel_from_json(parse_json(text));
  return rel_from_text(text);
}

std::size_t parse_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("not a count: '" + s + "'");
  try {
    return static_cast<std::size_t>(std::stoull(s));
  } catch (const std::exception&) {
    throw ParseError("count out of range: '" + s + "'");
  }
}

// "MxN" with M = N gives one carrier used on both sides; otherwise two.
TypeSig parse_sig(const std::string& text) {
  auto x = text.find('x');
  if (x == std::string::npos)
    throw ParseError("signature must look like 2x3: '" + text + "'");
  std::size_t rows = parse_count(text.substr(0, x));
  std::size_t cols = parse_count(text.substr(x + 1));
  if (rows == cols) {
    Carrier a{"A", rows};
    return TypeSig{a, a};
  }
  return TypeSig{Carrier{"A", rows}, Carrier{"B", cols}};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

std::string verdict(const AxiomCheck& c) {
  if (c.holds) return "pass";
  return "fail (" + c.counterexample + ")";
}

int run_abstract(const std::string& source) {
  AbstractModel m;
  if (source == "one" || source == "two" || source == "three" || source == "four") {
    m = builtin_model(source);
  } else {
    m = model_from_json(parse_json(slurp(source)));
  }
  AxiomReport report = check_axioms(m);
  std::cout << "model with " << m.size() << " elements\n";
  std::cout << "monoid: " << verdict(report.monoid) << "\n";
  std::cout << "lattice: " << verdict(report.lattice) << "\n";
  std::cout << "converse: " << verdict(report.converse_laws) << "\n";
  std::cout << "factors: " << verdict(report.factors) << "\n";
  std::cout << "modularity: " << verdict(report.modularity) << "\n";
  std::cout << "core axioms: " << (report.core_pass() ? "pass" : "fail")
            << "\n";
  std::cout << "cone rule: " << (report.cone.holds ? "holds" : "fails") << "\n";
  if (report.choice.holds) {
    std::cout << "choice of indexes: holds\n";
  } else {
    std::cout << "choice of indexes: " << report.choice.counterexample << "\n";
  }
  ModelThins mt = thins_in_model(m);
  std::cout << "thins order on pers: "
            << (mt.discrete ? "discrete" : "not discrete") << "\n";
  std::cout << "minimality gap: "
            << (check_minimality_gap(m) ? "present" : "absent") << "\n";
  return report.core_pass() ? 0 : 1;
}

int run_construct(const std::string& path) {
  Rel r = read_rel_file(path);
  Per p{r};
  CompletionTrace t = maximal_completion(p);
  std::cout << "P = " << pair_list(p) << " on " << to_string(r.sig()) << "\n";
  std::cout << "q = " << pair_list(t.support) << "\n";
  std::cout << "J = " << pair_list(t.choice) << "\n";
  std::cout << "R = " << pair_list(t.link) << "\n";
  std::cout << "Q = " << pair_list(t.completed) << "\n";
  std::cout << "P thins Q: " << (thins_per(p, t.completed) ? "yes" : "no")
            << "\n";
  std::cout << "Q maximal: "
            << (maximality_condition(t.completed) ? "yes" : "no") << "\n";
  return 0;
}

int run_index(const std::string& path) {
  Rel r = read_rel_file(path);
  Rel j = find_rel_index(r);
  std::cout << "R = " << pair_list(r) << " on " << to_string(r.sig()) << "\n";
  std::cout << "index = " << pair_list(j) << "\n";
  std::cout << "core: " << (is_core(j) ? "yes" : "no") << "\n";
  if (!is_rel_index(j, r)) {
    std::cerr << "chosen index failed validation\n";
    return 1;
  }
  if (r.sig().homogeneous() && is_per(r))
    std::cout << "per index = " << pair_list(find_per_index(Per{r})) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model checking for the thins order on typed relations"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the whole lemma suite");
  std::vector<std::size_t> sizes;
  std::vector<std::string> sig_texts;
  std::uint64_t seed = 1;
  bool as_json = false;
  SuiteConfig defaults;
  std::size_t samples = defaults.sample_budget;
  std::size_t triple_cap = defaults.triple_cap;
  std::size_t max_per_size = defaults.limits.max_per_carrier;
  std::size_t max_cells = defaults.limits.max_rel_cells;
  verify->add_option("--size", sizes,
                     "carrier size for the per lemmas, repeatable");
  verify->add_option("--sig", sig_texts,
                     "signature MxN for the typed lemmas, repeatable");
  verify->add_option("--seed", seed, "base seed for sampled quantification");
  verify->add_flag("--json", as_json, "emit the report as JSON");
  verify->add_option("--samples", samples,
                     "samples drawn from oversized tuple spaces");
  verify->add_option("--triple-cap", triple_cap,
                     "largest tuple space still checked exhaustively");
  verify->add_option("--max-per-size", max_per_size,
                     "capacity guard for per enumeration");
  verify->add_option("--max-cells", max_cells,
                     "capacity guard for relation enumeration");

  auto* poset = app.add_subcommand(
      "poset", "emit the thins ordering of all pers as a DOT diagram");
  std::size_t poset_size = 2;
  std::size_t poset_cap = 4;
  std::string poset_out;
  poset->add_option("--size", poset_size, "carrier size");
  poset->add_option("--cap", poset_cap, "largest carrier accepted");
  poset->add_option("--out", poset_out, "output file, stdout when absent");

  auto* count_cmd =
      app.add_subcommand("counts", "count pers and their order extremes");
  std::size_t count_size = 3;
  std::size_t count_cap = 5;
  count_cmd->add_option("--size", count_size, "carrier size");
  count_cmd->add_option("--cap", count_cap, "largest carrier accepted");

  auto* abstract_cmd = app.add_subcommand(
      "abstract", "check the operator axioms in a finite abstract model");
  std::string model_source;
  abstract_cmd
      ->add_option("--model", model_source,
                   "one, two, three, four, or a JSON file with tables")
      ->required();

  auto* construct = app.add_subcommand(
      "construct", "run the maximal completion of a per and show each stage");
  std::string per_path;
  construct->add_option("--per", per_path, "relation file holding a per")
      ->required();

  auto* index_cmd = app.add_subcommand(
      "index", "compute the chosen core index of a relation");
  std::string rel_path;
  index_cmd->add_option("--rel", rel_path, "relation file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      SuiteConfig cfg;
      if (!sizes.empty()) cfg.sizes = sizes;
      if (!sig_texts.empty()) {
        cfg.sigs.clear();
        for (const std::string& s : sig_texts) cfg.sigs.push_back(parse_sig(s));
      }
      cfg.seed = seed;
      cfg.sample_budget = samples;
      cfg.triple_cap = triple_cap;
      cfg.limits.max_per_carrier = max_per_size;
      cfg.limits.max_rel_cells = max_cells;
      std::vector<LemmaReport> reports = run_lemma_suite(cfg);
      std::cout << (as_json ? suite_report_json(cfg, reports)
                            : suite_report_text(cfg, reports));
      return all_pass(reports) ? 0 : 1;
    }
    if (poset->parsed()) {
      write_output(poset_out, export_thins_poset(poset_size, "dot", poset_cap));
      return 0;
    }
    if (count_cmd->parsed()) {
      Counts c = counts(count_size, count_cap);
      std::cout << "carrier A(" << count_size << "): pers " << c.pers
                << ", coreflexives " << c.coreflexives << ", minimal "
                << c.minimal << ", maximal " << c.maximal << ", equivalences "
                << c.equivalences << "\n";
      return 0;
    }
    if (abstract_cmd->parsed()) return run_abstract(model_source);
    if (construct->parsed()) return run_construct(per_path);
    if (index_cmd->parsed()) return run_index(rel_path);
  } catch (const ParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::length_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::logic_error& ex) {
    std::cerr << "verification failed: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
