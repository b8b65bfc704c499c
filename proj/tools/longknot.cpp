// Command-line front end: compute invariants, verify the matrix identities,
// generate random diagrams, and run batch sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include "longknot/longknot.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using namespace longknot;

namespace {

struct input_options {
  std::string path;
  std::string inline_pd;
  std::string inline_braid;
  std::string example;
  std::string kind;  // pd | braid | empty: infer from extension
  int basepoint = -1;
};

void add_input_flags(CLI::App* cmd, input_options& in) {
  cmd->add_option("input", in.path, "input file (.pd or .braid)");
  cmd->add_option("--pd", in.inline_pd, "inline PD text");
  cmd->add_option("--braid", in.inline_braid, "inline braid text, e.g. \"strands 2; s1 s1 s1\"");
  cmd->add_option("--example", in.example, "built-in example name (paper)");
  cmd->add_option("--kind", in.kind, "input kind for files without a known extension")
      ->check(CLI::IsMember({"pd", "braid"}));
  cmd->add_option("--basepoint", in.basepoint, "basepoint edge (default: file's basepoint line, else 0)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

long_knot_diagram load_diagram(const input_options& in) {
  const int sources = static_cast<int>(!in.path.empty()) + static_cast<int>(!in.inline_pd.empty()) +
                      static_cast<int>(!in.inline_braid.empty()) + static_cast<int>(!in.example.empty());
  if (sources != 1)
    throw std::runtime_error("expected exactly one input (file, --pd, --braid or --example)");

  if (!in.example.empty()) {
    long_knot_diagram lk = builtin_example(in.example);
    if (in.basepoint >= 0) lk = make_long(lk.diagram, in.basepoint);
    return lk;
  }

  std::string kind = in.kind;
  std::string text;
  if (!in.inline_pd.empty()) {
    kind = "pd";
    text = in.inline_pd;
  } else if (!in.inline_braid.empty()) {
    kind = "braid";
    text = in.inline_braid;
  } else {
    text = read_file(in.path);
    if (kind.empty()) {
      if (in.path.ends_with(".pd")) kind = "pd";
      else if (in.path.ends_with(".braid")) kind = "braid";
      else throw std::runtime_error("cannot infer input kind of '" + in.path + "'; pass --kind");
    }
  }

  if (kind == "braid") {
    closed_diagram d = from_braid(parse_braid(text));
    return make_long(std::move(d), in.basepoint >= 0 ? in.basepoint : 0);
  }
  const pd_document doc = parse_pd_document(text);
  const int basepoint = in.basepoint >= 0 ? in.basepoint : doc.basepoint.value_or(0);
  return make_long(doc.diagram, basepoint);
}

std::string default_format(const char* fallback) {
  const char* env = std::getenv("LONGKNOT_FORMAT");
  return env && *env ? env : fallback;
}

void print_int_matrix(std::ostream& out, const std::string& name, const int_matrix& m) {
  out << name << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << " " << m(i, j);
    out << "\n";
  }
}

void print_laurent_matrix(std::ostream& out, const std::string& name, const laurent_matrix& m) {
  out << name << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << " [" << m(i, j).str() << "]";
    out << "\n";
  }
}

void print_vector(std::ostream& out, const std::string& name, const std::vector<int>& v) {
  out << name << ":";
  for (int value : v) out << " " << value;
  out << "\n";
}

int run_compute(const input_options& in, const std::string& format) {
  const invariant_bundle b = compute_bundle(load_diagram(in));
  if (format == "json") {
    std::cout << to_json(b).dump(2) << "\n";
    return 0;
  }
  std::cout << "n: " << b.n << "\nl: " << b.l << "\n";
  print_vector(std::cout, "sigma", b.sigma);
  print_vector(std::cout, "d", b.d);
  print_vector(std::cout, "S", b.s);
  print_int_matrix(std::cout, "T", b.T);
  print_laurent_matrix(std::cout, "A", b.A);
  print_int_matrix(std::cout, "W", b.W);
  std::cout << "beta:  " << b.beta.str() << "\n"
            << "delta: " << b.delta.str() << "\n"
            << "beta normalized:  " << (b.beta.is_zero() ? "0" : normalize(b.beta).str()) << "\n"
            << "delta normalized: " << (b.delta.is_zero() ? "0" : normalize(b.delta).str()) << "\n";
  return 0;
}

int run_verify(const input_options& in, const std::string& flip_t) {
  invariant_bundle b = compute_bundle(load_diagram(in));
  if (!flip_t.empty()) {
    int i = 0, j = 0;
    if (std::sscanf(flip_t.c_str(), "%d,%d", &i, &j) != 2 || i < 1 || j < 1 || i > b.n || j > b.n)
      throw std::runtime_error("--debug-flip-t expects I,J with 1 <= I,J <= n");
    b.T(i - 1, j - 1) = 1 - b.T(i - 1, j - 1);
  }
  const verification_report report = verify(b);
  std::cout << to_json(report).dump(2) << "\n";
  return report.all_ok() ? 0 : 1;
}

int run_batch(std::uint64_t seed, int count, int max_crossings, const std::string& dir,
              const std::string& format, int jobs) {
  std::vector<std::pair<std::string, long_knot_diagram>> diagrams;
  if (!dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.path().extension() == ".pd" || entry.path().extension() == ".braid") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      input_options in;
      in.path = path.string();
      diagrams.emplace_back(path.stem().string(), load_diagram(in));
    }
  } else {
    splitmix64 rng(seed);
    gen_options opt;
    opt.max_crossings = max_crossings;
    for (int i = 0; i < count; ++i) {
      std::ostringstream id;
      id << "knot_" << std::setw(4) << std::setfill('0') << (i + 1);
      diagrams.emplace_back(id.str(), random_long_knot(rng, opt));
    }
  }

  struct batch_row {
    invariant_bundle bundle;
    verification_report report;
  };
  std::vector<batch_row> rows(diagrams.size());
  std::atomic<std::size_t> cursor{0};
  if (jobs <= 0) jobs = static_cast<int>(std::min(std::thread::hardware_concurrency(), 8u));
  if (jobs < 1) jobs = 1;
  auto worker = [&]() {
    for (std::size_t i = cursor.fetch_add(1); i < diagrams.size(); i = cursor.fetch_add(1)) {
      rows[i].bundle = compute_bundle(diagrams[i].second);
      rows[i].report = verify(rows[i].bundle);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool all_ok = true;
  for (const auto& row : rows) all_ok = all_ok && row.report.all_ok();

  if (format == "csv") {
    std::cout << "id,n,l,sign,beta,delta,theorem_ok,proposition_ok,detW\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i].report;
      std::cout << diagrams[i].first << "," << rows[i].bundle.n << "," << r.l << "," << r.sign << ","
                << rows[i].bundle.beta.str() << "," << rows[i].bundle.delta.str() << ","
                << (r.theorem_holds ? "true" : "false") << "," << (r.proposition_holds ? "true" : "false") << ","
                << r.det_w << "\n";
    }
  } else if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      nlohmann::json row = to_json(rows[i].report);
      row["id"] = diagrams[i].first;
      row["n"] = rows[i].bundle.n;
      out.push_back(std::move(row));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i)
      std::cout << diagrams[i].first << ": n=" << rows[i].bundle.n << " l=" << rows[i].report.l
                << " sign=" << rows[i].report.sign << " detW=" << rows[i].report.det_w
                << (rows[i].report.all_ok() ? " ok" : " FAILED") << "\n";
    std::cout << (all_ok ? "all ok" : "FAILURES PRESENT") << " (" << rows.size() << " diagrams)\n";
  }
  return all_ok ? 0 : 1;
}

int run_gen(std::uint64_t seed, int count, int max_crossings, const std::string& out_dir) {
  fs::create_directories(out_dir);
  splitmix64 rng(seed);
  gen_options opt;
  opt.max_crossings = max_crossings;
  int produced = 0;
  try {
    for (int i = 0; i < count; ++i) {
      const long_knot_diagram lk = random_long_knot(rng, opt);
      std::ostringstream name;
      name << "knot_" << std::setw(4) << std::setfill('0') << (i + 1) << ".pd";
      std::ofstream out(fs::path(out_dir) / name.str(), std::ios::binary);
      out << render_pd(lk.diagram) << "basepoint " << lk.basepoint_edge << "\n";
      ++produced;
    }
  } catch (const generation_exhausted&) {
    std::cerr << "generation budget exhausted; produced " << produced << " of " << count << " diagrams\n";
    return 2;
  }
  std::cout << "wrote " << produced << " diagrams to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of long-knot diagrams"};
  app.require_subcommand(1);

  input_options compute_in, verify_in;
  std::string compute_format = default_format("text");
  std::string verify_flip_t;
  std::uint64_t batch_seed = 1, gen_seed = 1;
  int batch_count = 100, gen_count = 10;
  int batch_max = 12, gen_max = 12;
  int batch_jobs = 0;
  std::string batch_dir, batch_format = default_format("text");
  std::string gen_out = "generated";
  std::string example_name = "paper";

  CLI::App* compute = app.add_subcommand("compute", "compute T, sigma, d, S, A, W, beta, delta and l");
  add_input_flags(compute, compute_in);
  compute->add_option("--format", compute_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "check the identities; exit 0 iff all hold");
  add_input_flags(verify_cmd, verify_in);
  verify_cmd->add_option("--debug-flip-t", verify_flip_t, "flip one bit of T before checking (I,J)")
      ->group("");  // hidden

  CLI::App* batch = app.add_subcommand("batch", "verify many diagrams, random or from a directory");
  batch->add_option("--seed", batch_seed, "random seed");
  batch->add_option("--count", batch_count, "number of random diagrams")->check(CLI::PositiveNumber);
  batch->add_option("--max-crossings", batch_max, "upper bound on crossings")->check(CLI::PositiveNumber);
  batch->add_option("--dir", batch_dir, "verify .pd/.braid files from this directory instead");
  batch->add_option("--format", batch_format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  batch->add_option("--jobs", batch_jobs, "worker threads (default: auto)");

  CLI::App* gen = app.add_subcommand("gen", "write random single-component diagrams as .pd files");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--count", gen_count, "number of diagrams")->check(CLI::PositiveNumber);
  gen->add_option("--max-crossings", gen_max, "upper bound on crossings")->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "output directory");

  CLI::App* example = app.add_subcommand("example", "print a built-in example as PD text");
  example->add_option("--name", example_name, "example name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_in, compute_format);
    if (verify_cmd->parsed()) return run_verify(verify_in, verify_flip_t);
    if (batch->parsed()) return run_batch(batch_seed, batch_count, batch_max, batch_dir, batch_format, batch_jobs);
    if (gen->parsed()) return run_gen(gen_seed, gen_count, gen_max, gen_out);
    if (example->parsed()) {
      const std::string text = builtin_example_pd(example_name);
      if (text.empty()) throw std::runtime_error("unknown example '" + example_name + "'");
      std::cout << text;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
