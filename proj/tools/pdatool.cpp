// Command-line front end: construct arrays, validate files, run the delivery
// simulation, inspect parameters, emit comparison tables, search minimal F.
// Exit codes: 0 ok, 1 domain failure, 2 usage or parse error, 3 budget.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pda/analysis.hpp"
#include "pda/cache_sim.hpp"
#include "pda/constructions.hpp"
#include "pda/io.hpp"
#include "pda/pda.hpp"

namespace {

std::string tuple_line(const pda::Pda& p) {
  const pda::Regularity reg = pda::regularity(p);
  std::ostringstream out;
  out << '(' << p.k() << ',' << p.f() << ',' << p.z() << ',' << p.s() << ')'
      << " g=" << (reg.g ? std::to_string(*reg.g) : std::string("-"))
      << " rate=" << pda::ratio_string(pda::rate(p));
  return out.str();
}

std::string index_set(const std::vector<int>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

void print_violations(const pda::ValidationReport& report, bool verbose) {
  for (const pda::Violation& v : report.violations) {
    std::cout << pda::cond_name(v.cond);
    if (v.symbol >= 0) std::cout << " symbol=" << v.symbol;
    std::cout << " rows=" << index_set(v.rows) << " cols=" << index_set(v.cols);
    if (verbose) std::cout << ": " << v.message;
    std::cout << '\n';
  }
}

std::string packet_name(pda::PacketId id) {
  return "W(" + std::to_string(id.file) + "," + std::to_string(id.packet) + ")";
}

struct ConstructArgs {
  std::string family;
  std::optional<int> k, t, q, m;
  std::string ratio;
  std::string out_path;
};

int run_construct(const ConstructArgs& args) {
  std::optional<pda::Pda> p;
  if (args.family == "an") {
    if (!args.k || !args.t) {
      std::cerr << "construct --family an needs --K and --t\n";
      return 2;
    }
    p = pda::maddah_ali_niesen(*args.k, *args.t);
  } else if (args.family == "a" || args.family == "b") {
    if (!args.q || !args.m) {
      std::cerr << "construct --family " << args.family << " needs --q and --m\n";
      return 2;
    }
    p = args.family == "a" ? pda::construction_a(*args.q, *args.m)
                           : pda::construction_b(*args.q, *args.m);
  } else {  // auto
    if (!args.k || args.ratio.empty()) {
      std::cerr << "construct --family auto needs --K and --ratio\n";
      return 2;
    }
    const pda::Rational mn = pda::parse_ratio(args.ratio);
    p = pda::for_system(*args.k,
                        boost::multiprecision::numerator(mn).convert_to<std::int64_t>(),
                        boost::multiprecision::denominator(mn).convert_to<std::int64_t>());
  }
  std::cout << tuple_line(*p) << '\n';
  if (!args.out_path.empty()) pda::write_pda_file(args.out_path, *p);
  return 0;
}

struct SimulateArgs {
  std::string path;
  int files = 0;
  std::vector<int> demand;
  std::string verify;
  int packet_bytes = 64;
  std::uint64_t seed = 1;
  bool verbose = false;
};

pda::VerifyMode parse_verify(const std::string& text) {
  if (text == "exhaustive") return pda::VerifyMode::exhaustive();
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ':')) parts.push_back(token);
  if (parts.size() == 3 && parts[0] == "sample") {
    try {
      return pda::VerifyMode::sample(std::stoull(parts[1]), std::stoull(parts[2]));
    } catch (const std::exception&) {
      // fall through to the usage error
    }
  }
  throw pda::ParseError("--verify", 0, 0, "expected 'exhaustive' or 'sample:COUNT:SEED'");
}

int run_simulate(const SimulateArgs& args) {
  const pda::Pda p = pda::read_pda_file(args.path);
  const pda::PayloadSpec payloads{args.seed, args.packet_bytes};
  const pda::CachingInstance inst = pda::place(p, args.files, payloads);

  if (!args.demand.empty()) {
    const std::vector<pda::Transmission> schedule = pda::deliver(inst, args.demand);
    for (const pda::Transmission& tx : schedule) {
      std::cout << "slot " << tx.slot << ":";
      for (size_t i = 0; i < tx.summands.size(); ++i) {
        std::cout << (i == 0 ? " " : " ^ ") << packet_name(tx.summands[i]);
      }
      std::cout << '\n';
    }
    const pda::DecodeReport report = pda::decode_all(inst, args.demand, schedule);
    for (const std::string& line : report.trace) std::cout << line << '\n';
    if (!report.complete || !report.bytes_ok) {
      std::cerr << "decode failed\n";
      return 1;
    }
    return 0;
  }

  const pda::VerifyMode mode = parse_verify(args.verify);
  const pda::VerifySummary summary =
      pda::verify_demands(inst, mode, args.verbose ? &std::cout : nullptr);
  std::cout << summary.summary_line() << '\n';
  return summary.ok == summary.demands ? 0 : 1;
}

struct TableArgs {
  std::string set;
  std::vector<int> ks;
  std::vector<std::string> ratios;
  std::string csv_path;
};

int run_table(const TableArgs& args) {
  std::vector<pda::ComparisonRow> rows;
  if (args.set == "table6") {
    rows = pda::table6();
  } else if (!args.ks.empty() && !args.ratios.empty()) {
    for (const std::string& text : args.ratios) {
      const pda::Rational mn = pda::parse_ratio(text);
      for (const int k : args.ks) rows.push_back(pda::comparison_row(k, mn));
    }
  } else {
    std::cerr << "table needs --set table6 or both --K and --ratio\n";
    return 2;
  }

  if (args.csv_path.empty()) {
    pda::write_csv(std::cout, rows);
  } else {
    std::ofstream out(args.csv_path, std::ios::binary);
    if (!out) throw pda::ParseError(args.csv_path, 0, 0, "cannot open file for writing");
    pda::write_csv(out, rows);
  }
  return 0;
}

struct SearchArgs {
  int k = 0;
  int g = 0;
  int stars_per_row = 0;
  int f_max = 0;
  std::uint64_t budget = 50'000'000;
};

int run_search(const SearchArgs& args) {
  const std::optional<pda::SearchResult> result =
      pda::brute_force_min_f(args.k, args.g, args.stars_per_row, args.f_max, args.budget);
  if (!result) {
    std::cout << "none <= " << args.f_max << '\n';
    return 0;
  }
  std::cout << "minF=" << result->f << '\n';
  for (const std::vector<pda::Cell>& row : result->grid) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) std::cout << ' ';
      if (row[i].is_star()) {
        std::cout << '*';
      } else {
        std::cout << row[i].symbol();
      }
    }
    std::cout << '\n';
  }
  return 0;
}

int run_validate(const std::string& path, bool verbose) {
  const pda::Pda p = pda::read_pda_file(path);
  const pda::ValidationReport report = pda::validate(p);
  if (report.valid) {
    std::cout << "valid (K,F,Z,S)=(" << p.k() << ',' << p.f() << ',' << p.z() << ','
              << p.s() << ')';
    const pda::Regularity reg = pda::regularity(p);
    std::cout << " g=" << (reg.g ? std::to_string(*reg.g) : std::string("-"))
              << " rate=" << pda::ratio_string(pda::rate(p)) << '\n';
    return 0;
  }
  std::cout << "invalid: " << report.violations.size() << " violation(s)\n";
  print_violations(report, verbose);
  return 1;
}

int run_analyze(const std::string& path, bool verbose) {
  const pda::Pda p = pda::read_pda_file(path);
  const pda::ValidationReport report = pda::validate(p);
  if (!report.valid) {
    std::cout << "invalid: " << report.violations.size() << " violation(s)\n";
    print_violations(report, verbose);
    return 1;
  }
  std::cout << tuple_line(p) << '\n';
  const pda::Regularity reg = pda::regularity(p);
  if (!reg.g) {
    std::cout << "gain bound: n/a (not regular)\n";
  } else {
    std::cout << "gain bound: " << (pda::check_gain_bound(p) ? "ok" : "fail") << '\n';
  }
  for (int user = 0; user < p.k(); ++user) {
    std::cout << "user " << user << ": " << index_set(pda::placement_set(p, user).rows)
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"placement delivery array toolkit"};
  app.require_subcommand(1);

  ConstructArgs cons;
  CLI::App* construct = app.add_subcommand("construct", "generate an array");
  construct->add_option("--family", cons.family, "an | a | b | auto")
      ->required()
      ->check(CLI::IsMember({"an", "a", "b", "auto"}));
  construct->add_option("--K", cons.k, "user count (an, auto)");
  construct->add_option("--t", cons.t, "corner-point parameter (an)");
  construct->add_option("--q", cons.q, "base (a, b)");
  construct->add_option("--m", cons.m, "exponent (a, b)");
  construct->add_option("--ratio", cons.ratio, "cache ratio p/q (auto)");
  construct->add_option("--out", cons.out_path, "write the array to this file");

  std::string validate_path;
  bool validate_verbose = false;
  CLI::App* validate = app.add_subcommand("validate", "check a PDA file");
  validate->add_option("file", validate_path, "PDA text file")->required();
  validate->add_flag("--verbose", validate_verbose, "append violation messages");

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "run placement and delivery");
  simulate->add_option("file", sim.path, "PDA text file")->required();
  simulate->add_option("--files", sim.files, "number of files N (>= K)")->required();
  CLI::Option* demand_opt =
      simulate->add_option("--demand", sim.demand, "comma-separated file index per user")
          ->delimiter(',');
  CLI::Option* verify_opt =
      simulate->add_option("--verify", sim.verify, "exhaustive | sample:COUNT:SEED");
  demand_opt->excludes(verify_opt);
  simulate->add_option("--packet-bytes", sim.packet_bytes, "payload bytes per packet")
      ->default_val(64);
  simulate->add_option("--seed", sim.seed, "payload generator seed")->default_val(1);
  simulate->add_flag("--verbose", sim.verbose, "print one line per verified demand");

  std::string analyze_path;
  bool analyze_verbose = false;
  CLI::App* analyze = app.add_subcommand("analyze", "describe a PDA file");
  analyze->add_option("file", analyze_path, "PDA text file")->required();
  analyze->add_flag("--verbose", analyze_verbose, "append violation messages");

  TableArgs table;
  CLI::App* table_cmd = app.add_subcommand("table", "emit the scheme comparison CSV");
  table_cmd->add_option("--set", table.set, "named row set")
      ->check(CLI::IsMember({"table6"}));
  table_cmd->add_option("--K", table.ks, "user counts")->delimiter(',');
  table_cmd->add_option("--ratio", table.ratios, "cache ratios p/q")->delimiter(',');
  table_cmd->add_option("--csv", table.csv_path, "write CSV here instead of stdout");

  SearchArgs search;
  CLI::App* search_cmd = app.add_subcommand("search", "minimal row count by brute force");
  search_cmd->add_option("--K", search.k, "columns")->required();
  search_cmd->add_option("--g", search.g, "occurrences per integer")->required();
  search_cmd->add_option("--stars-per-row", search.stars_per_row, "stars in every row")
      ->required();
  search_cmd->add_option("--fmax", search.f_max, "largest row count to try")->required();
  search_cmd->add_option("--budget", search.budget, "search node budget")
      ->default_val(std::uint64_t{50'000'000});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return run_construct(cons);
    if (validate->parsed()) return run_validate(validate_path, validate_verbose);
    if (simulate->parsed()) {
      if (sim.demand.empty() && sim.verify.empty()) {
        std::cerr << "simulate needs --demand or --verify\n";
        return 2;
      }
      return run_simulate(sim);
    }
    if (analyze->parsed()) return run_analyze(analyze_path, analyze_verbose);
    if (table_cmd->parsed()) return run_table(table);
    if (search_cmd->parsed()) return run_search(search);
  } catch (const pda::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const pda::SearchBudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const pda::CapExceeded& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const pda::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
