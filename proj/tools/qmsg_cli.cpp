// Batch front end: loads input files, runs analyses, emits JSON reports.
// Exit codes: 0 success/equivalent, 1 not equivalent, 2 parse error,
// 3 validation error, 4 resource cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qmsg/io.hpp"
#include "qmsg/version.hpp"

namespace {

using qmsg::io::json;

json report_header(const std::string& command,
                   const std::vector<std::filesystem::path>& inputs) {
  json meta;
  meta["tool"] = qmsg::kToolName;
  meta["version"] = qmsg::kVersion;
  meta["command"] = command;
  json files = json::array();
  for (const auto& p : inputs) {
    json f;
    f["path"] = p.string();
    f["digest"] = qmsg::io::file_digest(p);
    files.push_back(std::move(f));
  }
  meta["inputs"] = std::move(files);
  meta["tolerances"] = qmsg::io::tolerance_report();
  return meta;
}

void emit(const json& report, const std::optional<std::string>& output_path) {
  const std::string text = report.dump(2) + "\n";
  if (output_path) {
    std::ofstream out(*output_path, std::ios::binary);
    if (!out) throw qmsg::validation_error("cannot write output file: " + *output_path);
    out << text;
  } else {
    std::cout << text;
  }
}

int run_alphabet(const std::string& input, const std::optional<std::string>& output) {
  const auto file = qmsg::io::load_alphabet(input);
  const qmsg::Alphabet& a = file.alphabet;

  json report = report_header("alphabet", {input});
  report["K"] = a.rank();
  report["ambient_dim"] = a.ambient_dim();
  report["letters"] = a.size();
  report["gram"] = qmsg::io::write_matrix(qmsg::gram_matrix(a));
  json basis = json::array();
  for (std::size_t k = 0; k < a.rank(); ++k)
    basis.push_back(qmsg::io::write_vector(a.basis_vector(k)));
  report["basis"] = std::move(basis);
  if (file.priors) {
    const qmsg::LetterMatrix rho = qmsg::letter_matrix(a, *file.priors);
    report["letter_matrix"] = qmsg::io::write_matrix(rho.matrix());
    json spectrum = json::array();
    for (const auto& pair : qmsg::letter_spectral(rho)) {
      json e;
      e["probability"] = pair.probability;
      e["vector"] = qmsg::io::write_vector(pair.vector);
      spectrum.push_back(std::move(e));
    }
    report["letter_spectrum"] = std::move(spectrum);
  }
  emit(report, output);
  return 0;
}

int run_stats(const std::string& input, std::optional<std::size_t> max_length,
              const std::optional<std::string>& output) {
  const auto file = qmsg::io::load_ensemble(input, max_length);
  const qmsg::MessageMatrix sigma = qmsg::message_matrix(file.ensemble);
  const qmsg::BlockDecomposition blocks = qmsg::block_diagonalize(sigma);

  json report = report_header("stats", {input});
  report["K"] = file.shape.letter_dim();
  report["N"] = file.shape.max_length();
  report["D"] = file.shape.dimension();
  report["entries"] = file.ensemble.entries().size();
  report["expected_length"] = qmsg::expected_length(sigma);
  report["length_distribution"] = blocks.lambdas;
  json spectrum = json::array();
  for (const auto& entry : qmsg::spectral_decomposition(sigma))
    spectrum.push_back(entry.probability);
  report["spectrum"] = std::move(spectrum);
  report["source_rank"] = qmsg::source_rank(file.ensemble);
  report["block_residual"] = blocks.off_block_residual;
  report["block_diagonal"] = sigma.block_diagonal();
  emit(report, output);
  return 0;
}

int run_equiv(const std::string& input, const std::string& input2, double tolerance,
              const std::optional<std::string>& output) {
  if (tolerance <= 0.0) throw qmsg::validation_error("tolerance must be positive");
  const auto a = qmsg::io::load_ensemble(input);
  const auto b = qmsg::io::load_ensemble(input2);
  const auto verdict = qmsg::ensembles_equivalent(a.ensemble, b.ensemble, tolerance);

  json report = report_header("equiv", {input, input2});
  report["equivalent"] = verdict.equivalent;
  report["distance"] = verdict.distance;
  report["tolerance"] = tolerance;
  emit(report, output);
  return verdict.equivalent ? 0 : 1;
}

int run_measure(const std::string& input, const std::string& kind,
                std::uint64_t trials, std::uint64_t seed,
                std::optional<std::size_t> max_length,
                const std::optional<std::string>& output) {
  if (kind != "length" && kind != "basis")
    throw qmsg::validation_error("kind must be \"length\" or \"basis\"");
  const qmsg::MeasureKind mk =
      kind == "length" ? qmsg::MeasureKind::length : qmsg::MeasureKind::basis;
  if (trials < 1) throw qmsg::validation_error("at least one trial required");

  const auto file = qmsg::io::load_ensemble(input, max_length);
  qmsg::Histogram h;
  if (file.ensemble.entries().size() == 1) {
    // Single pure state: stay on the sparse path, no dense cap involved.
    h = qmsg::sample_statistics(file.ensemble.entries()[0].state, mk, trials, seed);
  } else {
    h = qmsg::sample_statistics(qmsg::message_matrix(file.ensemble), mk, trials, seed);
  }

  json report = report_header("measure", {input});
  report["kind"] = kind;
  report.update(qmsg::io::write_histogram(h));
  emit(report, output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator for quantum messages of variable length"};
  app.require_subcommand(1);

  std::string input, input2, kind = "length";
  std::optional<std::string> output;
  std::optional<std::size_t> max_length;
  double tolerance = 1e-10;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;

  auto* alphabet = app.add_subcommand("alphabet", "Analyze a quantum alphabet file");
  alphabet->add_option("--input", input, "Alphabet JSON file")->required();
  alphabet->add_option("--output", output, "Report path (default: stdout)");

  auto* stats = app.add_subcommand("stats", "Ensemble statistics and spectra");
  stats->add_option("--input", input, "Ensemble JSON file")->required();
  stats->add_option("--max-length", max_length, "Override the maximum message length");
  stats->add_option("--output", output, "Report path (default: stdout)");

  auto* equiv = app.add_subcommand("equiv", "Compare two ensembles' message matrices");
  equiv->add_option("--input", input, "First ensemble JSON file")->required();
  equiv->add_option("--input2", input2, "Second ensemble JSON file")->required();
  equiv->add_option("--tol", tolerance, "Frobenius distance tolerance");
  equiv->add_option("--output", output, "Report path (default: stdout)");

  auto* measure = app.add_subcommand("measure", "Seeded measurement statistics");
  measure->add_option("--input", input, "Ensemble JSON file")->required();
  measure->add_option("--kind", kind, "Measurement kind: length or basis");
  measure->add_option("--trials", trials, "Number of trials")->required();
  measure->add_option("--seed", seed, "64-bit seed");
  measure->add_option("--max-length", max_length, "Override the maximum message length");
  measure->add_option("--output", output, "Report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(alphabet)) return run_alphabet(input, output);
    if (app.got_subcommand(stats)) return run_stats(input, max_length, output);
    if (app.got_subcommand(equiv)) return run_equiv(input, input2, tolerance, output);
    return run_measure(input, kind, trials, seed, max_length, output);
  } catch (const qmsg::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const qmsg::cap_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 4;
  } catch (const qmsg::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
