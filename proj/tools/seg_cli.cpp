// seg - construct, verify, search, count and tabulate super edge-graceful
// labelings of paths and odd cycles.
//
// Exit codes: 0 success/verified/found; 1 verification failed or exhaustive
// search found nothing; 2 usage or I/O error; 3 limit hit (inconclusive).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "seg/construct.hpp"
#include "seg/io.hpp"
#include "seg/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::string format_labels(const seg::EdgeLabeling& labels) {
  std::string out = "[";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(labels[i]);
  }
  out += "]";
  return out;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitUsage;
  }
  f << text;
  return f ? kExitOk : kExitUsage;
}

std::optional<int> env_hard_cap() {
  const char* s = std::getenv("SEG_HARD_CAP");
  if (!s || !*s) return std::nullopt;
  try {
    int v = std::stoi(s);
    if (v >= 1) return v;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring invalid SEG_HARD_CAP value '" << s << "'\n";
  return std::nullopt;
}

struct GenArgs {
  std::string graph = "path";
  int n = 0;
  std::string format = "json";
  std::string out;
};

int run_gen(const GenArgs& args) {
  seg::LabeledGraphDocument doc;
  seg::ConstructionPlan plan;
  try {
    if (args.graph == "path") {
      plan = seg::classify(args.n);
      doc.graph = seg::GraphSpec::path(args.n);
      doc.edge_labels = seg::construct_path(args.n);
    } else {
      if (args.n % 2 == 0 || args.n < 3) {
        std::cerr << "error: cycle generation supports odd n >= 3 only (C_" << args.n
                  << " requested)\n";
        return kExitUsage;
      }
      plan = seg::classify(args.n);
      auto [graph, labels] = seg::construct_cycle(args.n);
      doc.graph = std::move(graph);
      doc.edge_labels = std::move(labels);
    }
  } catch (const seg::UnsupportedPath& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoSolution;
  }

  seg::VerificationReport report = seg::verify(doc.graph, doc.edge_labels);
  if (!report.passed) {
    std::cerr << "internal error: constructed labeling failed verification\n";
    return kExitNoSolution;
  }
  doc.vertex_sums = report.vertex_sums;
  seg::DocumentMeta meta;
  meta.case_id = plan.case_id;
  meta.k = plan.k;
  doc.meta = meta;

  return write_output(args.format == "dot" ? seg::to_dot(doc) : seg::encode(doc), args.out);
}

int run_verify(const std::string& input) {
  std::ifstream f(input, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << input << "'\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << f.rdbuf();

  seg::LabeledGraphDocument doc;
  try {
    doc = seg::decode(buf.str());
  } catch (const seg::DecodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  seg::VerificationReport report = seg::verify(doc.graph, doc.edge_labels);
  if (report.passed) {
    std::cout << "pass\n";
    return kExitOk;
  }
  std::string stage = report.edge_check != seg::CheckResult::ok
                          ? "edge_check=" + seg::to_string(report.edge_check)
                          : "vertex_check=" + seg::to_string(report.vertex_check);
  std::cout << "fail: " << stage;
  if (report.witness) std::cout << " witness=" << *report.witness;
  std::cout << "\n";
  return kExitNoSolution;
}

struct SearchArgs {
  std::string graph = "path";
  int n = 0;
  bool all = false;
  bool count = false;
  bool no_symmetry = false;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::int64_t> time_limit_ms;
  int threads = 1;
};

int run_search(const SearchArgs& args) {
  seg::GraphSpec g;
  if (args.graph == "path") {
    g = seg::GraphSpec::path(args.n);
  } else {
    if (args.n < 3) {
      std::cerr << "error: cycles need n >= 3\n";
      return kExitUsage;
    }
    g = seg::GraphSpec::cycle(args.n);
  }

  seg::SearchOptions opts;
  opts.mode = args.count ? seg::SearchMode::count
              : args.all ? seg::SearchMode::all
                         : seg::SearchMode::first;
  opts.use_negation_reduction = !args.no_symmetry;
  opts.use_reversal_reduction = !args.no_symmetry;
  opts.node_limit = args.node_limit;
  if (args.time_limit_ms)
    opts.time_limit = std::chrono::milliseconds(*args.time_limit_ms);
  opts.threads = args.threads;
  opts.hard_cap = env_hard_cap();

  seg::SearchCertificate cert;
  try {
    cert = seg::search(g, opts);
  } catch (const seg::InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::cerr << "outcome=" << seg::to_string(cert.outcome) << " nodes=" << cert.nodes_explored
            << "\n";
  if (opts.mode != seg::SearchMode::first) std::cerr << cert.orbit_note << "\n";

  switch (cert.outcome) {
    case seg::SearchOutcome::inconclusive:
      return kExitInconclusive;
    case seg::SearchOutcome::impossible:
      if (args.count) std::cout << 0 << "\n";
      return kExitNoSolution;
    case seg::SearchOutcome::exists:
      break;
  }
  if (args.count) {
    std::cout << cert.raw_count << "\n";
  } else if (args.all) {
    for (const auto& sol : cert.solutions) std::cout << format_labels(sol) << "\n";
  } else {
    std::cout << format_labels(*cert.witness) << "\n";
  }
  return kExitOk;
}

struct TableArgs {
  int from = 1;
  int to = 1;
  std::string out;
};

int run_table(const TableArgs& args) {
  if (args.from < 1 || args.to < args.from) {
    std::cerr << "error: need 1 <= from <= to\n";
    return kExitUsage;
  }
  std::vector<seg::SweepRow> rows;
  rows.reserve(static_cast<size_t>(args.to - args.from + 1));
  for (int n = args.from; n <= args.to; ++n) {
    seg::ConstructionPlan plan = seg::classify(n);
    seg::SweepRow row;
    row.n = n;
    row.case_id = plan.case_id;
    row.k = plan.k;
    row.q = n - 1;
    if (plan.case_id == seg::CaseId::unsupported) {
      row.status = seg::SweepStatus::unsupported;
    } else {
      row.status = seg::SweepStatus::supported;
      seg::EdgeLabeling labels = seg::construct_path(n);
      row.verified = seg::verify(seg::GraphSpec::path(n), labels).passed;
    }
    rows.push_back(row);
  }
  return write_output(seg::to_csv_table(rows), args.out);
}

int run_bench(int threads) {
  seg::SearchOptions opts;
  opts.mode = seg::SearchMode::count;
  opts.threads = threads;
  opts.hard_cap = env_hard_cap();
  std::cout << "instance,raw_count,nodes,wall_ms,nodes_per_sec\n";
  auto report = [&](const std::string& name, const seg::GraphSpec& g) {
    auto start = std::chrono::steady_clock::now();
    seg::SearchCertificate cert = seg::search(g, opts);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    double rate = ms > 0 ? 1000.0 * static_cast<double>(cert.nodes_explored) / ms : 0.0;
    std::cout << name << "," << cert.raw_count << "," << cert.nodes_explored << "," << ms << ","
              << static_cast<std::uint64_t>(rate) << "\n";
  };
  for (int n = 7; n <= 11; ++n) report("P_" + std::to_string(n), seg::GraphSpec::path(n));
  for (int n = 5; n <= 9; ++n) report("C_" + std::to_string(n), seg::GraphSpec::cycle(n));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"super edge-graceful labelings of paths and odd cycles"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "construct a labeling and emit it");
  gen->add_option("--graph", gen_args.graph, "graph family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle"}));
  gen->add_option("--n", gen_args.n, "vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--format", gen_args.format, "output format (default json)")
      ->check(CLI::IsMember({"json", "dot"}));
  gen->add_option("--out", gen_args.out, "output file (default stdout)");

  std::string verify_input;
  CLI::App* verify = app.add_subcommand("verify", "check a labeling document");
  verify->add_option("--input", verify_input, "labeling document (.seg.json)")->required();

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "exhaustive search for labelings");
  search->add_option("--graph", search_args.graph, "graph family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle"}));
  search->add_option("--n", search_args.n, "vertex count")->required()->check(CLI::PositiveNumber);
  search->add_flag("--all", search_args.all, "enumerate all solutions");
  search->add_flag("--count", search_args.count, "count solutions");
  search->add_flag("--no-symmetry", search_args.no_symmetry,
                   "disable negation/reversal reductions");
  search->add_option("--node-limit", search_args.node_limit, "abort after this many nodes");
  search->add_option("--time-limit-ms", search_args.time_limit_ms, "abort after this many ms");
  search->add_option("--threads", search_args.threads, "worker threads (output-identical)")
      ->check(CLI::PositiveNumber);

  SearchArgs count_args;
  CLI::App* count = app.add_subcommand("count", "count labelings (search --count)");
  count->add_option("--graph", count_args.graph, "graph family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle"}));
  count->add_option("--n", count_args.n, "vertex count")->required()->check(CLI::PositiveNumber);
  count->add_flag("--no-symmetry", count_args.no_symmetry,
                  "disable negation/reversal reductions");
  count->add_option("--threads", count_args.threads, "worker threads (output-identical)")
      ->check(CLI::PositiveNumber);

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "sweep construct+verify, emit CSV");
  table->add_option("--from", table_args.from, "first n")->required();
  table->add_option("--to", table_args.to, "last n")->required();
  table->add_option("--out", table_args.out, "output file (default stdout)");

  int bench_threads = 1;
  CLI::App* bench = app.add_subcommand("bench", "time the oracle on a fixed ladder");
  bench->add_option("--threads", bench_threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (verify->parsed()) return run_verify(verify_input);
    if (search->parsed()) return run_search(search_args);
    if (count->parsed()) {
      count_args.count = true;
      return run_search(count_args);
    }
    if (table->parsed()) return run_table(table_args);
    if (bench->parsed()) return run_bench(bench_threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
