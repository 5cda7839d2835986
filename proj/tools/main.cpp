// Command-line front end: list wavelet families, dump sampled generators,
// build dictionaries, and model signals by segment-wise sparse
// approximation.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wavedict/dictionary.hpp"
#include "wavedict/filters.hpp"
#include "wavedict/io.hpp"
#include "wavedict/signal_model.hpp"
#include "wavedict/wavelet_gen.hpp"

namespace {

using wavedict::AtomDescriptor;
using wavedict::BitOrder;
using wavedict::DictionaryParams;

// "a:b" (inclusive range) or "a,b,c" (explicit list).
std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> levels;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    if (hi < lo) throw CLI::ValidationError("levels", "range is empty");
    for (int j = lo; j <= hi; ++j) levels.push_back(j);
    return levels;
  }
  std::stringstream fields(text);
  std::string token;
  while (std::getline(fields, token, ',')) {
    levels.push_back(std::stoi(token));
  }
  if (levels.empty()) throw CLI::ValidationError("levels", "no levels given");
  return levels;
}

// Decimal ("0.25") or fraction ("1/4").
double parse_translation(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return std::stod(text);
  const double num = std::stod(text.substr(0, slash));
  const double den = std::stod(text.substr(slash + 1));
  return num / den;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void print_filter_row(const char* label, const Eigen::VectorXd& v) {
  std::cout << label << " = [";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::cout << (i ? ", " : "") << format_double(v(i));
  }
  std::cout << "]\n";
}

int run_families(const std::string& name) {
  if (!name.empty()) {
    const auto pair = wavedict::filters(name);
    if (!pair) {
      std::cerr << "wrong name of a wavelet family: " << name << "\n";
      return 1;
    }
    std::cout << name << "\n";
    print_filter_row("h", pair->h);
    print_filter_row("g", pair->g);
    return 0;
  }
  for (const auto& info : wavedict::family_catalog()) {
    const auto pair = wavedict::filters(info.id);
    std::printf("%-8s h taps: %2d   g taps: %2d   vanishing moments: %d\n",
                info.name, static_cast<int>(pair.h.size()),
                static_cast<int>(pair.g.size()), info.vanishing_moments);
  }
  return 0;
}

int run_gen(const std::string& name, int level,
            const std::filesystem::path& out_dir) {
  const auto pair = wavedict::filters(name);
  if (!pair) {
    std::cerr << "wrong name of a wavelet family: " << name << "\n";
    return 1;
  }
  const auto gen = wavedict::wavelet_gen(pair->h, pair->g, level);
  std::filesystem::create_directories(out_dir);

  const double step = 1.0 / static_cast<double>(1 << level);
  const auto dump = [&](const char* file, const Eigen::VectorXd& v) {
    std::ofstream out(out_dir / file, std::ios::binary);
    out << "x,value\n";
    for (Eigen::Index m = 0; m < v.size(); ++m) {
      out << format_double(m * step) << ',' << format_double(v(m)) << '\n';
    }
  };
  dump("phi.csv", gen.phi);
  dump("psi.csv", gen.psi);
  std::cout << "phi: " << gen.phi.size() << " points, psi: " << gen.psi.size()
            << " points at step 1/" << (1 << level) << "\n";
  return 0;
}

void write_descriptors(const std::vector<AtomDescriptor>& columns,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const AtomDescriptor& d = columns[i];
    nlohmann::json row{{"index", i + 1},
                       {"kind", wavedict::to_string(d.kind)},
                       {"level", d.level},
                       {"shift", d.shift},
                       {"locality", wavedict::to_string(d.locality)}};
    out << row.dump() << '\n';
  }
}

int run_dict(const std::string& name, int n_points,
             const std::string& levels_text, const std::string& b_text,
             const std::filesystem::path& out_dir, bool write_matrix) {
  const DictionaryParams pars{n_points, parse_levels(levels_text),
                              parse_translation(b_text)};
  const auto dict = wavedict::gen_dict(name, pars);

  std::filesystem::create_directories(out_dir);
  write_descriptors(dict.columns, out_dir / "descriptors.jsonl");
  {
    std::ofstream out(out_dir / "ind.csv", std::ios::binary);
    for (int c : dict.counts) out << c << '\n';
  }
  if (write_matrix) {
    std::ofstream out(out_dir / "matrix.csv", std::ios::binary);
    for (Eigen::Index r = 0; r < dict.matrix.rows(); ++r) {
      for (Eigen::Index c = 0; c < dict.matrix.cols(); ++c) {
        out << (c ? "," : "") << format_double(dict.matrix(r, c));
      }
      out << '\n';
    }
  }

  std::cout << dict.matrix.rows() << " x " << dict.matrix.cols() << "\n";
  std::cout << "ind = [";
  for (std::size_t i = 0; i < dict.counts.size(); ++i) {
    std::cout << (i ? ", " : "") << dict.counts[i];
  }
  std::cout << "]\n";
  if (dict.removed_columns > 0) {
    std::cout << "removed near-zero columns: " << dict.removed_columns << "\n";
  }
  return 0;
}

int run_approx(const std::string& input, const std::string& format,
               const std::string& name, int n_points,
               const std::string& levels_text, const std::string& b_text,
               int n_cosine, double prd0, bool basis, bool msb_first,
               int threads, const std::filesystem::path& out_dir) {
  std::string fmt = format;
  if (fmt == "auto") {
    fmt = std::filesystem::path(input).extension() == ".dat" ? "ubit11"
                                                             : "csv";
  }
  Eigen::VectorXd f;
  if (fmt == "ubit11") {
    f = wavedict::to_signal(wavedict::read_ubit11(
        input, msb_first ? BitOrder::msb_first : BitOrder::lsb_first));
  } else {
    f = wavedict::read_csv(input);
  }

  std::vector<int> levels = parse_levels(levels_text);
  double b = parse_translation(b_text);
  if (basis) {
    // Basis configuration: unit translation plus one extra (finer) scale.
    b = 1.0;
    levels.push_back(*std::max_element(levels.begin(), levels.end()) + 1);
  }

  const auto result = wavedict::signal_model(f, n_points, prd0, name, levels,
                                             b, n_cosine, threads);
  wavedict::write_outputs(result, out_dir);

  std::cout << "Q   = " << result.segments.size() << "\n";
  std::cout << "K   = " << result.total_atoms << "\n";
  std::cout << "PRD = " << format_double(result.prd_global) << " %\n";
  std::cout << "SR  = " << format_double(result.sr_global) << "\n";
  std::cout << "outputs written to " << out_dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wavelet dictionaries and sparse modelling of ECG signals"};
  app.require_subcommand(1);

  // families
  std::string fam_name;
  auto* families = app.add_subcommand(
      "families", "List supported wavelet families or print one filter pair");
  families->add_option("--name", fam_name, "Print h and g of this family");

  // gen
  std::string gen_family;
  int gen_level = 6;
  std::filesystem::path gen_out = "gen_out";
  auto* gen = app.add_subcommand(
      "gen", "Sample scaling function and wavelet on the dyadic grid");
  gen->add_option("--family", gen_family, "Wavelet family")->required();
  gen->add_option("--level", gen_level, "Refinement level u (points l/2^u)")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "Output directory");

  // shared dictionary options
  std::string dict_family = "CDF97";
  int n_points = 500;
  std::string levels_text = "3:7";
  std::string b_text = "1/4";

  // dict
  std::filesystem::path dict_out = "dict_out";
  bool write_matrix = false;
  auto* dict = app.add_subcommand("dict", "Build a wavelet dictionary");
  dict->add_option("--family", dict_family, "Wavelet family");
  dict->add_option("--points", n_points, "Segment length N_b");
  dict->add_option("--levels", levels_text, "Levels, e.g. 2:3 or 2,3");
  dict->add_option("--b", b_text, "Translation factor, e.g. 0.25 or 1/4");
  dict->add_option("--out", dict_out, "Output directory");
  dict->add_flag("--write-matrix", write_matrix, "Also write matrix.csv");

  // approx
  std::string input;
  std::string format = "auto";
  int n_cosine = 10;
  double prd0 = 0.53;
  bool basis = false;
  bool msb_first = false;
  int threads = 1;
  std::filesystem::path approx_out = "model_out";
  auto* approx = app.add_subcommand(
      "approx", "Sparse approximation of a partitioned signal");
  approx->add_option("--input", input, "Signal file (.dat or .csv)")
      ->required();
  approx->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"auto", "ubit11", "csv"}));
  approx->add_option("--family", dict_family, "Wavelet family");
  approx->add_option("--points", n_points, "Segment length N_b");
  approx->add_option("--levels", levels_text, "Levels, e.g. 3:7");
  approx->add_option("--b", b_text, "Translation factor");
  approx->add_option("--cosines", n_cosine, "Cosine atoms M_c");
  approx->add_option("--prd0", prd0, "Per-segment distortion target (%)");
  approx->add_flag("--basis", basis,
                   "Use the basis configuration: b=1 and one extra scale");
  approx->add_flag("--msb-first", msb_first,
                   "Read packed records with MSB-first bit order");
  approx->add_option("--threads", threads, "Worker threads for segments")
      ->check(CLI::PositiveNumber);
  approx->add_option("--out", approx_out, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (families->parsed()) return run_families(fam_name);
    if (gen->parsed()) return run_gen(gen_family, gen_level, gen_out);
    if (dict->parsed()) {
      return run_dict(dict_family, n_points, levels_text, b_text, dict_out,
                      write_matrix);
    }
    return run_approx(input, format, dict_family, n_points, levels_text,
                      b_text, n_cosine, prd0, basis, msb_first, threads,
                      approx_out);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
