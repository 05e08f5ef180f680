#pragma once

#include <span>
#include <string>
#include <string_view>

#include "invcensus/census.hpp"
#include "invcensus/herzog.hpp"
#include "invcensus/scan.hpp"

namespace invcensus {

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_output_format(std::string_view text);

enum class ScanKind { Collisions, Zar, Conjecture15 };

// Every renderer returns text ending in exactly one newline. json and csv
// output is byte-deterministic.
std::string render_spectrum(const SpectrumRecord& record, OutputFormat format);
std::string render_involutions(const SpectrumRecord& record, OutputFormat format);
std::string render_counterexample(const CounterexampleVerification& verification, OutputFormat format);
std::string render_theorem_rows(std::uint64_t involutions, std::span<const TheoremRow> rows, OutputFormat format);
std::string render_collisions(std::span<const CollisionRecord> records, ScanKind kind, OutputFormat format);
std::string render_zar(std::span<const ZarReport> reports, OutputFormat format);

}  // namespace invcensus
