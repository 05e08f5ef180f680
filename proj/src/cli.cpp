#include "invcensus/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "invcensus/census.hpp"
#include "invcensus/error.hpp"
#include "invcensus/herzog.hpp"
#include "invcensus/report.hpp"
#include "invcensus/scan.hpp"

namespace invcensus {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return kExitCapacity;
    case ErrorKind::HypothesisViolated: return kExitHypothesis;
    case ErrorKind::ParseError:
    case ErrorKind::UnknownName:
    case ErrorKind::UnsupportedFamily:
    case ErrorKind::ConditionViolated:
    case ErrorKind::DegreeTooLarge:
    case ErrorKind::NotPrime: return kExitUsage;
    default: return kExitInternal;
  }
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Involution census of finite simple groups", "invcensus"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "table";
  bool no_cache = false;
  std::string cache_dir;
  std::uint64_t max_order = 1'000'000;
  unsigned workers = default_workers();
  std::uint64_t cap = kDefaultCap;

  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--no-cache", no_cache, "Neither read nor write the spectrum cache");
  app.add_option("--cache-dir", cache_dir, "Spectrum cache directory (default $INVCENSUS_CACHE_DIR or ./cache)");
  app.add_option("--max-order", max_order, "Largest catalog order to scan");
  app.add_option("--workers", workers, "Worker threads for scans")->check(CLI::PositiveNumber);
  app.add_option("--cap", cap, "Enumeration cap (elements per group)")->check(CLI::PositiveNumber);

  std::string group_text;
  auto* spectrum = app.add_subcommand("spectrum", "Element-order spectrum I_k(G)");
  spectrum->add_option("id", group_text, "Group id, e.g. alt:7 or psp4:3")->required();
  auto* involutions = app.add_subcommand("involutions", "Involution classes and centralizer orders");
  involutions->add_option("id", group_text, "Group id")->required();

  auto* herzog = app.add_subcommand("herzog", "Involution theorem and counterexample");
  herzog->require_subcommand(1);
  auto* verify = herzog->add_subcommand("verify", "Enumerate PSp(4,3) and PSL(3,4) and compare");
  std::uint64_t involution_target = 0;
  auto* classify = herzog->add_subcommand("classify", "Theorem rows consistent with I involutions");
  classify->add_option("I", involution_target, "Number of involutions")->required();

  auto* scan = app.add_subcommand("scan", "Scan the catalog");
  scan->require_subcommand(1);
  auto* collisions = scan->add_subcommand("collisions", "Pairs with equal involution counts");
  auto* zar = scan->add_subcommand("zar", "Equal I_p for distinct primes within a group");
  auto* conj15 = scan->add_subcommand("conj15", "Collisions that also agree at an odd prime");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const OutputFormat format = parse_output_format(format_text);
    CensusOptions options;
    options.workers = workers;
    options.cap = cap;
    if (!no_cache) {
      if (!cache_dir.empty())
        options.cache_dir = cache_dir;
      else if (const char* env = std::getenv("INVCENSUS_CACHE_DIR"); env && *env)
        options.cache_dir = env;
      else
        options.cache_dir = "cache";
    }

    if (spectrum->parsed() || involutions->parsed()) {
      const auto record = obtain_record(parse_group_id(group_text), options);
      out << (spectrum->parsed() ? render_spectrum(record, format) : render_involutions(record, format));
      return kExitOk;
    }
    if (verify->parsed()) {
      out << render_counterexample(verify_counterexample(cap), format);
      return kExitOk;
    }
    if (classify->parsed()) {
      const auto rows = classify_by_involutions(involution_target);
      out << render_theorem_rows(involution_target, rows, format);
      return kExitOk;
    }
    if (scan->parsed()) {
      if (max_order > cap) {
        err << "--max-order " << max_order << " exceeds the enumeration cap " << cap << '\n';
        return kExitUsage;
      }
      const auto catalog = build_catalog(max_order);
      const auto records = obtain_records(catalog, options);
      if (collisions->parsed())
        out << render_collisions(herzog_collision_scan(catalog, records), ScanKind::Collisions, format);
      else if (conj15->parsed())
        out << render_collisions(conjecture15_scan(catalog, records), ScanKind::Conjecture15, format);
      else if (zar->parsed())
        out << render_zar(zar_scan(catalog, records), format);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "invcensus: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "invcensus: " << e.what() << '\n';
    return kExitInternal;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace invcensus
