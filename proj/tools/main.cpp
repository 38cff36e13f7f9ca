// contingent: batch verdicts on neighborhood models, frame classes and
// Hilbert-style derivations for the Delta (noncontingency) language.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "contingent/acceptance.hpp"
#include "contingent/fixtures.hpp"
#include "contingent/random.hpp"
#include "contingent/search.hpp"
#include "contingent/transform.hpp"

namespace {

using namespace contingent;

// Exit codes: 0 valid/ok/true, 1 falsified/rejected/false, 2 usage or parse
// error, 3 size bound exceeded.
constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

enum class Format { Human, Machine };

struct Config {
  Format format = Format::Human;
  bool verbose = false;
  std::uint64_t seed = kDefaultSeed;
  int default_search_max = 2;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

Formula parse_cli_formula(const std::string& text) {
  try {
    Formula f = parse(text);
    if (f.has_metavariables()) {
      throw std::runtime_error("phi/psi/chi are schema metavariables, not atoms");
    }
    return f;
  } catch (const ParseError& err) {
    throw std::runtime_error("syntax error at column " + std::to_string(err.column) + ": " +
                             err.what());
  }
}

int cmd_eval(const Config& config, const std::string& model_path, const std::string& formula_text,
             const std::string& state) {
  const Model model = parse_model(read_file(model_path));
  const Formula f = parse_cli_formula(formula_text);
  const bool verdict = eval(model, state, f);
  if (config.format == Format::Machine) {
    std::cout << "verdict=" << (verdict ? "true" : "false");
    if (config.verbose) {
      std::cout << " truth_set=" << state_set_to_string(model.frame(), truth_set(model, f));
    }
    std::cout << '\n';
  } else {
    std::cout << (verdict ? "true" : "false") << '\n';
    if (config.verbose) {
      std::cout << "truth set: " << state_set_to_string(model.frame(), truth_set(model, f))
                << '\n';
    }
  }
  return verdict ? kExitOk : kExitRejected;
}

int cmd_props(const Config& config, const std::string& model_path) {
  const Model model = parse_model(read_file(model_path));
  const Frame& frame = model.frame();
  PropertySet found;
  found.m = check_property(frame, PropertySet::from_flags("m"));
  found.c = check_property(frame, PropertySet::from_flags("c"));
  found.n = check_property(frame, PropertySet::from_flags("n"));
  found.z = check_property(frame, PropertySet::from_flags("z"));
  const char* label = found.filter() ? "filter" : (found.quasi_filter() ? "quasi-filter" : "-");
  if (config.format == Format::Machine) {
    std::cout << "m=" << (found.m ? "true" : "false") << " c=" << (found.c ? "true" : "false")
              << " n=" << (found.n ? "true" : "false") << " z=" << (found.z ? "true" : "false")
              << " class=" << label << '\n';
  } else {
    std::cout << "m (superset-closed):      " << (found.m ? "yes" : "no") << '\n'
              << "c (intersection-closed):  " << (found.c ? "yes" : "no") << '\n'
              << "n (contains unit):        " << (found.n ? "yes" : "no") << '\n'
              << "z (complement-closed):    " << (found.z ? "yes" : "no") << '\n';
    if (found.filter()) {
      std::cout << "the frame is a filter\n";
    } else if (found.quasi_filter()) {
      std::cout << "the frame is a quasi-filter\n";
    }
  }
  return kExitOk;
}

int cmd_check(const Config& config, const std::string& derivation_path) {
  const Derivation derivation = parse_derivation(read_file(derivation_path));
  const CheckResult result = check_derivation(derivation);
  if (config.format == Format::Machine) {
    std::cout << "verdict=" << (result.ok ? "ok" : "error");
    if (!result.ok) std::cout << " line=" << result.line << " reason=" << result.reason;
    if (result.ok && result.conjectured) std::cout << " status=conjectured";
    std::cout << '\n';
  } else if (result.ok) {
    std::cout << "ok: " << derivation.lines.size() << " lines verified in " << derivation.system;
    if (result.conjectured) std::cout << " (conjectured axiomatization)";
    std::cout << '\n';
  } else if (result.line > 0) {
    std::cout << "error at line " << result.line << ": " << result.reason << '\n';
  } else {
    std::cout << "error: " << result.reason << '\n';
  }
  return result.ok ? kExitOk : kExitRejected;
}

int cmd_search(const Config& config, const std::string& schema_name, const std::string& flags,
               int max_size, bool exhaustive, std::uint64_t samples,
               const std::string& atoms_csv, const std::string& witness_path) {
  const Schema* schema = find_schema(schema_name);
  if (!schema) throw std::runtime_error("unknown schema '" + schema_name + "'");
  const PropertySet props = PropertySet::from_flags(flags);

  std::vector<std::string> atoms;
  if (atoms_csv.empty()) {
    atoms = default_instance_atoms(*schema);
  } else {
    std::stringstream stream(atoms_csv);
    std::string atom;
    while (std::getline(stream, atom, ',')) atoms.push_back(atom);
  }

  const SearchMode mode =
      exhaustive ? SearchMode::exhaustive() : SearchMode::sample(samples, config.seed);
  const SearchReport report = find_countermodel(*schema, atoms, props, max_size, mode);

  if (config.format == Format::Machine) {
    std::cout << report.machine_line() << '\n';
  } else {
    std::cout << report.human_text();
  }
  if (report.falsified) {
    write_file(witness_path, to_text(report.witness->model));
    if (config.format == Format::Human) {
      std::cout << "witness written to " << witness_path << '\n';
    }
    return kExitRejected;
  }
  return kExitOk;
}

int cmd_transform_model(const Config& config, const std::string& which,
                        const std::string& model_path, const std::string& out_path) {
  const Model model = parse_model(read_file(model_path));
  const Model result = (which == "supplement") ? supplementation(model)
                       : (which == "complement")
                           ? complementation(model)
                           : close_under(model, PropertySet::from_flags(which));
  const std::string text = to_text(result);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
    if (config.format == Format::Human) std::cout << "written to " << out_path << '\n';
  }
  return kExitOk;
}

int cmd_transform_star(const Config&, const std::string& formula_text) {
  const Formula f = parse_cli_formula(formula_text);
  std::cout << to_string(star_translate(f)) << '\n';
  return kExitOk;
}

int cmd_fixtures_suite(const Config& config, std::uint64_t samples) {
  bool all = true;
  for (const auto& item : fixture_suite(config.seed, samples)) {
    all = all && item.pass;
    if (config.format == Format::Machine) {
      std::cout << machine_line(item) << '\n';
    } else {
      std::cout << (item.pass ? "pass" : "FAIL") << "  " << item.id << "  (" << item.detail
                << ", " << item.frames_examined << " frames)\n";
    }
  }
  return all ? kExitOk : kExitRejected;
}

int cmd_fixtures_run_all(const Config& config) {
  if (config.format == Format::Machine) {
    const auto results = run_acceptance(&std::cout);
    for (const auto& result : results) {
      if (!result.pass) return kExitRejected;
    }
    return kExitOk;
  }
  bool all = true;
  for (const auto& result : run_acceptance(nullptr)) {
    all = all && result.pass;
    std::cout << (result.pass ? "PASS" : "FAIL") << "  " << result.number << ". " << result.name
              << "  [" << static_cast<long long>(result.elapsed_ms) << " ms]";
    if (!result.pass) std::cout << "  " << result.detail;
    std::cout << '\n';
  }
  return all ? kExitOk : kExitRejected;
}

int cmd_fixtures_list(const Config&) {
  for (const auto& entry : fixture_model_texts()) std::cout << "model " << entry.name << '\n';
  for (const auto& entry : fixture_derivation_texts()) {
    std::cout << "derivation " << entry.name << '\n';
  }
  return kExitOk;
}

int cmd_fixtures_show(const Config&, const std::string& name) {
  for (const auto& entry : fixture_model_texts()) {
    if (entry.name == name) {
      std::cout << entry.text;
      return kExitOk;
    }
  }
  for (const auto& entry : fixture_derivation_texts()) {
    if (entry.name == name) {
      std::cout << entry.text;
      return kExitOk;
    }
  }
  throw std::runtime_error("unknown fixture '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for contingency logic under neighborhood semantics"};
  app.require_subcommand(1);

  Config config;
  app.add_option_function<std::string>(
         "--format",
         [&config](const std::string& name) {
           config.format = (name == "machine") ? Format::Machine : Format::Human;
         },
         "output format: human or machine")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--verbose", config.verbose, "more detail on stdout");
  app.add_option("--seed", config.seed, "seed for sampled modes")
      ->envname("CONTINGENT_SEED");

  int exit_code = kExitOk;

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "truth of a formula at a state of a model");
  eval_cmd->fallthrough();
  std::string model_path, formula_text, state_name;
  eval_cmd->add_option("model", model_path, "model file")->required();
  eval_cmd->add_option("formula", formula_text, "formula text")->required();
  eval_cmd->add_option("state", state_name, "state name")->required();
  eval_cmd->callback([&] { exit_code = cmd_eval(config, model_path, formula_text, state_name); });

  // props
  auto* props_cmd = app.add_subcommand("props", "closure properties of a model's frame");
  props_cmd->fallthrough();
  std::string props_model_path;
  props_cmd->add_option("model", props_model_path, "model file")->required();
  props_cmd->callback([&] { exit_code = cmd_props(config, props_model_path); });

  // check
  auto* check_cmd = app.add_subcommand("check", "verify a Hilbert-style derivation");
  check_cmd->fallthrough();
  std::string derivation_path;
  check_cmd->add_option("derivation", derivation_path, "derivation file")->required();
  check_cmd->callback([&] { exit_code = cmd_check(config, derivation_path); });

  // search
  auto* search_cmd = app.add_subcommand("search", "hunt for a countermodel to a schema instance");
  search_cmd->fallthrough();
  std::string schema_name, props_flags = "", atoms_csv, witness_path = "witness.model";
  int max_size = config.default_search_max;
  bool exhaustive = false;
  std::uint64_t samples = 10000;
  search_cmd->add_option("schema", schema_name, "schema name (dEqu, dM, dC, ...)")->required();
  search_cmd->add_option("--props", props_flags, "frame class flags, e.g. mc (default: all)");
  search_cmd->add_option("--max", max_size, "size bound (exhaustive <= 3, sampled <= 5)");
  auto* exhaustive_flag = search_cmd->add_flag("--exhaustive", exhaustive, "sweep every frame");
  auto* sample_opt = search_cmd->add_option("--sample", samples, "number of sampled frames");
  sample_opt->excludes(exhaustive_flag);
  search_cmd->add_option("--atoms", atoms_csv, "instantiation atoms, e.g. p,q,r");
  search_cmd->add_option("--witness", witness_path, "where to write a found countermodel");
  search_cmd->callback([&] {
    const bool use_sample = sample_opt->count() > 0;  // exhaustive unless sampling requested
    exit_code = cmd_search(config, schema_name, props_flags, max_size, !use_sample, samples,
                           atoms_csv, witness_path);
  });

  // transform
  auto* transform_cmd = app.add_subcommand("transform", "model transforms and the translation");
  transform_cmd->require_subcommand(1);
  transform_cmd->fallthrough();
  std::string tf_model_path, tf_out_path, star_formula;
  auto* supplement_cmd = transform_cmd->add_subcommand("supplement", "superset closure");
  supplement_cmd->fallthrough();
  supplement_cmd->add_option("model", tf_model_path, "model file")->required();
  supplement_cmd->add_option("--out", tf_out_path, "output file (default stdout)");
  supplement_cmd->callback(
      [&] { exit_code = cmd_transform_model(config, "supplement", tf_model_path, tf_out_path); });
  auto* complement_cmd = transform_cmd->add_subcommand("complement", "complement closure");
  complement_cmd->fallthrough();
  complement_cmd->add_option("model", tf_model_path, "model file")->required();
  complement_cmd->add_option("--out", tf_out_path, "output file (default stdout)");
  complement_cmd->callback(
      [&] { exit_code = cmd_transform_model(config, "complement", tf_model_path, tf_out_path); });
  auto* star_cmd = transform_cmd->add_subcommand("star", "translate D-formulas into B-formulas");
  star_cmd->fallthrough();
  star_cmd->add_option("formula", star_formula, "formula text")->required();
  star_cmd->callback([&] { exit_code = cmd_transform_star(config, star_formula); });

  // fixtures
  auto* fixtures_cmd = app.add_subcommand("fixtures", "shipped models, derivations, suites");
  fixtures_cmd->require_subcommand(1);
  fixtures_cmd->fallthrough();
  std::uint64_t suite_samples = 10000;
  auto* suite_cmd = fixtures_cmd->add_subcommand("suite", "schema-vs-class reproduction suite");
  suite_cmd->fallthrough();
  suite_cmd->add_option("--sample", suite_samples, "sampled frames per class at size 3");
  suite_cmd->callback([&] { exit_code = cmd_fixtures_suite(config, suite_samples); });
  auto* run_all_cmd = fixtures_cmd->add_subcommand("run-all", "full verification gate");
  run_all_cmd->fallthrough();
  run_all_cmd->callback([&] { exit_code = cmd_fixtures_run_all(config); });
  auto* list_cmd = fixtures_cmd->add_subcommand("list", "list shipped fixtures");
  list_cmd->callback([&] { exit_code = cmd_fixtures_list(config); });
  auto* show_cmd = fixtures_cmd->add_subcommand("show", "print a fixture verbatim");
  std::string fixture_name;
  show_cmd->add_option("name", fixture_name, "fixture name")->required();
  show_cmd->callback([&] { exit_code = cmd_fixtures_show(config, fixture_name); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  } catch (const BoundExceeded& err) {
    std::cerr << "bound exceeded: " << err.what() << '\n';
    return kExitBound;
  } catch (const ModelFormatError& err) {
    std::cerr << "model format error at line " << err.line << ": " << err.what() << '\n';
    return kExitUsage;
  } catch (const DerivationFormatError& err) {
    std::cerr << "derivation format error at line " << err.line << ": " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }

  return exit_code;
}
