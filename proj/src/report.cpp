#include "invcensus/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "invcensus/error.hpp"

namespace invcensus {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(std::span<const std::uint64_t> values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

/// Left-aligned columns separated by two spaces.
class TextTable {
 public:
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    std::ostringstream os;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      line.erase(line.find_last_not_of(' ') + 1);
      os << line << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string s(std::uint64_t v) { return std::to_string(v); }

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::ParseError, "unknown output format '" + std::string(text) + "'");
}

std::string render_spectrum(const SpectrumRecord& r, OutputFormat format) {
  const auto primes = r.spectrum.primes();
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["id"] = r.id;
      j["order"] = r.order;
      Json spectrum = Json::object();
      for (const auto& [k, n] : r.spectrum.entries) spectrum[std::to_string(k)] = n;
      j["spectrum"] = spectrum;
      j["primes"] = primes;
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out = "k,count\n";
      for (const auto& [k, n] : r.spectrum.entries) out += s(k) + "," + s(n) + "\n";
      return out;
    }
    case OutputFormat::Table: {
      std::string out = "group " + r.id + "  order " + s(r.order) + "\n";
      TextTable t;
      t.row({"k", "count"});
      for (const auto& [k, n] : r.spectrum.entries) t.row({s(k), s(n)});
      return out + t.str() + "primes: " + join(primes, " ") + "\n";
    }
  }
  return {};
}

std::string render_involutions(const SpectrumRecord& r, OutputFormat format) {
  std::uint64_t total = 0, index_sum = 0;
  for (const auto& [size, cent] : r.involution_classes) {
    total += size;
    index_sum += r.order / cent;
  }
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["id"] = r.id;
      j["order"] = r.order;
      j["k2"] = r.involution_classes.size();
      Json classes = Json::array();
      for (const auto& [size, cent] : r.involution_classes) {
        Json c;
        c["classSize"] = size;
        c["centralizerOrder"] = cent;
        classes.push_back(c);
      }
      j["classes"] = classes;
      j["totalInvolutions"] = total;
      j["centralizerIndexSum"] = index_sum;
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out = "classSize,centralizerOrder\n";
      for (const auto& [size, cent] : r.involution_classes) out += s(size) + "," + s(cent) + "\n";
      return out;
    }
    case OutputFormat::Table: {
      std::string out = "group " + r.id + "  order " + s(r.order) + "  involution classes " +
                        s(r.involution_classes.size()) + "\n";
      TextTable t;
      t.row({"class", "size", "centralizer", "|G|/|C|"});
      std::size_t n = 0;
      for (const auto& [size, cent] : r.involution_classes) t.row({s(++n), s(size), s(cent), s(r.order / cent)});
      out += t.str();
      std::string quotients, sizes;
      for (const auto& [size, cent] : r.involution_classes) {
        quotients += (quotients.empty() ? "" : " + ") + s(r.order) + "/" + s(cent);
        sizes += (sizes.empty() ? "" : " + ") + s(size);
      }
      if (r.involution_classes.empty()) quotients = sizes = "0";
      return out + "I2 = " + quotients + " = " + sizes + " = " + s(index_sum) + "\n";
    }
  }
  return {};
}

std::string render_counterexample(const CounterexampleVerification& v, OutputFormat format) {
  const auto& r = v.report;
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["groupA"] = r.group_a;
      j["groupB"] = r.group_b;
      j["i2A"] = r.i2_a;
      j["i2B"] = r.i2_b;
      j["orderA"] = r.order_a;
      j["orderB"] = r.order_b;
      j["isCounterexample"] = r.is_counterexample;
      return dump(j);
    }
    case OutputFormat::Csv:
      return "groupA,groupB,i2A,i2B,orderA,orderB,isCounterexample\n" + r.group_a + "," + r.group_b + "," +
             s(r.i2_a) + "," + s(r.i2_b) + "," + s(r.order_a) + "," + s(r.order_b) + "," +
             (r.is_counterexample ? "true" : "false") + "\n";
    case OutputFormat::Table: {
      TextTable t;
      t.row({"group", "order", "I2", "involution classes (size, centralizer)"});
      auto classes = [](const InvolutionClassReport& rep) {
        std::string out;
        for (const auto& c : rep.classes)
          out += (out.empty() ? "" : " ") + ("(" + s(c.class_size) + ", " + s(c.centralizer_order) + ")");
        return out;
      };
      t.row({r.group_a, s(r.order_a), s(r.i2_a), classes(v.classes_a)});
      t.row({r.group_b, s(r.order_b), s(r.i2_b), classes(v.classes_b)});
      return t.str() + "isCounterexample: " + (r.is_counterexample ? "true" : "false") + "\n";
    }
  }
  return {};
}

std::string render_theorem_rows(std::uint64_t involutions, std::span<const TheoremRow> rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const auto& row : rows) {
        Json j;
        j["family"] = to_string(row.family.tag);
        j["group"] = format_group_id(row.family);
        j["parameter"] = row.family.parameter;
        j["predictedI"] = row.predicted_involutions;
        j["epsilon"] = row.epsilon;
        j["condition"] = row.condition;
        arr.push_back(j);
      }
      return dump(arr);
    }
    case OutputFormat::Csv: {
      std::string out = "family,group,parameter,predictedI,epsilon,condition\n";
      for (const auto& row : rows)
        out += std::string(to_string(row.family.tag)) + "," + format_group_id(row.family) + "," +
               s(row.family.parameter) + "," + s(row.predicted_involutions) + "," + std::to_string(row.epsilon) +
               "," + csv_field(row.condition) + "\n";
      return out;
    }
    case OutputFormat::Table: {
      std::string out = "I = " + s(involutions) + ": " + s(rows.size()) + " matching row(s)\n";
      if (rows.empty()) return out;
      TextTable t;
      t.row({"family", "group", "I", "epsilon", "condition"});
      for (const auto& row : rows)
        t.row({to_string(row.family.tag), format_group_id(row.family), s(row.predicted_involutions),
               row.epsilon == 0 ? "-" : (row.epsilon > 0 ? "+1" : "-1"), row.condition});
      return out + t.str();
    }
  }
  return {};
}

std::string render_collisions(std::span<const CollisionRecord> records, ScanKind kind, OutputFormat format) {
  auto refutes = [kind](const CollisionRecord& r) {
    return kind == ScanKind::Conjecture15 ? refutes_conjecture15(r) : refutes_collision_conjecture(r);
  };
  switch (format) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const auto& r : records) {
        Json j;
        j["idA"] = r.id_a;
        j["idB"] = r.id_b;
        j["i2"] = r.i2;
        j["orderA"] = r.order_a;
        j["orderB"] = r.order_b;
        j["sameOrder"] = r.same_order;
        j["oddPrimeMatches"] = r.odd_prime_matches;
        j["refutes"] = refutes(r);
        arr.push_back(j);
      }
      return dump(arr);
    }
    case OutputFormat::Csv: {
      std::string out = "idA,idB,i2,orderA,orderB,sameOrder,oddPrimeMatches\n";
      for (const auto& r : records)
        out += r.id_a + "," + r.id_b + "," + s(r.i2) + "," + s(r.order_a) + "," + s(r.order_b) + "," +
               (r.same_order ? "true" : "false") + "," + join(r.odd_prime_matches, " ") + "\n";
      return out;
    }
    case OutputFormat::Table: {
      if (records.empty()) return "no collisions\n";
      TextTable t;
      t.row({"idA", "idB", "i2", "orderA", "orderB", "sameOrder", "oddPrimeMatches", ""});
      std::size_t refuting = 0;
      for (const auto& r : records) {
        const bool bad = refutes(r);
        refuting += bad;
        t.row({r.id_a, r.id_b, s(r.i2), s(r.order_a), s(r.order_b), r.same_order ? "true" : "false",
               r.odd_prime_matches.empty() ? "-" : join(r.odd_prime_matches, " "), bad ? "<== REFUTES" : ""});
      }
      return t.str() + s(records.size()) + " record(s), " + s(refuting) + " refuting\n";
    }
  }
  return {};
}

std::string render_zar(std::span<const ZarReport> reports, OutputFormat format) {
  auto counts_text = [](const ZarReport& z) {
    std::string out;
    for (const auto& [p, n] : z.prime_counts) out += (out.empty() ? "" : " ") + s(p) + ":" + s(n);
    return out;
  };
  auto violations_text = [](const ZarReport& z) {
    std::string out;
    for (const auto& [p, r] : z.violations) out += (out.empty() ? "" : " ") + s(p) + "-" + s(r);
    return out;
  };
  switch (format) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const auto& z : reports) {
        Json j;
        j["id"] = z.id;
        j["order"] = z.order;
        Json counts = Json::array();
        for (const auto& [p, n] : z.prime_counts) counts.push_back({p, n});
        j["primeCounts"] = counts;
        Json violations = Json::array();
        for (const auto& [p, r] : z.violations) violations.push_back({p, r});
        j["violations"] = violations;
        arr.push_back(j);
      }
      return dump(arr);
    }
    case OutputFormat::Csv: {
      std::string out = "id,order,primeCounts,violations\n";
      for (const auto& z : reports) out += z.id + "," + s(z.order) + "," + counts_text(z) + "," + violations_text(z) + "\n";
      return out;
    }
    case OutputFormat::Table: {
      TextTable t;
      t.row({"id", "order", "I_p by prime", "violations"});
      std::size_t violating = 0;
      for (const auto& z : reports) {
        violating += !z.violations.empty();
        t.row({z.id, s(z.order), counts_text(z), z.violations.empty() ? "-" : violations_text(z) + "  <== FINDING"});
      }
      return t.str() + s(reports.size()) + " group(s), " + s(violating) + " with equal I_p for distinct primes\n";
    }
  }
  return {};
}

}  // namespace invcensus
