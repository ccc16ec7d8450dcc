// biharmonic: exact divisor-mean reports, sequence enumeration, crystal
// generation, identity verification and a uniqueness-conjecture scanner.
//
// Every invocation writes exactly one output envelope to stdout in the
// selected --format; diagnostics go to stderr. Exit codes:
//   0  success
//   1  operational error (I/O, network, out-of-range request)
//   2  usage error
//   3  verification failure (an identity or cross-check did not hold)
//   4  counterexample found (conjecture scan with nonempty findings)

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "biharmonic/biharmonic.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace biharmonic;

constexpr int kOk = 0;
constexpr int kOperationalError = 1;
constexpr int kUsageError = 2;
constexpr int kVerificationFailure = 3;
constexpr int kCounterexampleFound = 4;

struct GlobalOptions {
  std::string format = "plain";
  unsigned threads = default_thread_count();
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------- rendering

void render_plain_value(std::ostream& os, const std::string& key,
                        const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, v] : value.items())
      render_plain_value(os, k, v, indent + 2);
  } else if (value.is_array()) {
    if (!value.empty() && value.front().is_object()) {
      os << pad << key << " (" << value.size() << "):\n";
      for (const auto& item : value) {
        os << pad << "  ";
        bool first = true;
        for (const auto& [k, v] : item.items()) {
          if (!first) os << "  ";
          first = false;
          os << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
        }
        os << "\n";
      }
    } else {
      os << pad << key << ":";
      for (const auto& item : value)
        os << " " << (item.is_string() ? item.get<std::string>() : item.dump());
      os << "\n";
    }
  } else if (value.is_string()) {
    os << pad << key << ": " << value.get<std::string>() << "\n";
  } else {
    os << pad << key << ": " << value.dump() << "\n";
  }
}

void render_plain(std::ostream& os, const Json& envelope) {
  os << "command: " << envelope.at("command").get<std::string>() << "\n";
  std::ostringstream params;
  bool first = true;
  for (const auto& [k, v] : envelope.at("parameters").items()) {
    if (!first) params << " ";
    first = false;
    params << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  }
  os << "parameters: " << params.str() << "\n";
  for (const auto& [k, v] : envelope.at("results").items())
    render_plain_value(os, k, v, 0);
  if (envelope.contains("seed"))
    os << "seed: " << envelope.at("seed").dump() << "\n";
  os << "timing_ms: " << envelope.at("timing_ms").dump() << "\n";
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  return csv_escape(v.is_string() ? v.get<std::string>() : v.dump());
}

// Scalars become '#' comment lines; the named table (array of objects, or
// array of scalars under a single column name) becomes the CSV body.
void render_csv(std::ostream& os, const Json& envelope,
                const std::string& table_key,
                const std::vector<std::string>& columns) {
  os << "# command: " << envelope.at("command").get<std::string>() << "\n";
  for (const auto& [k, v] : envelope.at("parameters").items())
    os << "# " << k << ": " << csv_cell(v) << "\n";
  std::vector<std::reference_wrapper<const Json>> stack;
  for (const auto& [k, v] : envelope.at("results").items()) {
    if (k == table_key) continue;
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items())
        os << "# " << k << "." << k2 << ": " << csv_cell(v2) << "\n";
    } else if (v.is_array()) {
      os << "# " << k << ": " << v.dump() << "\n";
    } else {
      os << "# " << k << ": " << csv_cell(v) << "\n";
    }
  }
  if (envelope.contains("seed"))
    os << "# seed: " << envelope.at("seed").dump() << "\n";
  os << "# timing_ms: " << envelope.at("timing_ms").dump() << "\n";

  bool first = true;
  for (const auto& col : columns) {
    if (!first) os << ",";
    first = false;
    os << col;
  }
  os << "\n";
  if (!envelope.at("results").contains(table_key)) return;
  for (const auto& row : envelope.at("results").at(table_key)) {
    first = true;
    for (const auto& col : columns) {
      if (!first) os << ",";
      first = false;
      if (row.is_object())
        os << (row.contains(col) ? csv_cell(row.at(col)) : "");
      else
        os << csv_cell(row);
    }
    os << "\n";
  }
}

// The one envelope this invocation prints.
void emit(const GlobalOptions& global, const Json& envelope,
          const std::string& csv_table, const std::vector<std::string>& csv_columns) {
  if (global.format == "json")
    std::cout << envelope.dump(2) << "\n";
  else if (global.format == "csv")
    render_csv(std::cout, envelope, csv_table, csv_columns);
  else
    render_plain(std::cout, envelope);
}

Json make_envelope(const std::string& command, Json parameters, Json results,
                   std::chrono::steady_clock::time_point started,
                   std::optional<std::uint64_t> seed = std::nullopt) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  Json env;
  env["command"] = command;
  env["parameters"] = std::move(parameters);
  env["results"] = std::move(results);
  if (seed) env["seed"] = *seed;
  env["timing_ms"] = elapsed.count();
  return env;
}

Json crystal_json(const CrystalRecord& rec) {
  Json j;
  j["n"] = rec.n.str();
  j["a"] = rec.a.str();
  j["b"] = rec.b.str();
  j["w"] = rec.w.str();
  if (rec.index) j["index"] = *rec.index;
  return j;
}

Json cross_check_json(const oeis::CrossCheckReport& report,
                      oeis::SequenceSource source) {
  Json j;
  j["id"] = report.id;
  j["source"] = source == oeis::SequenceSource::embedded ? "embedded" : "fetched";
  j["compared"] = report.compared;
  j["verdict"] = oeis::to_string(report.verdict);
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches) {
    Json row;
    row["index"] = m.index;
    row["expected"] = m.expected.str();
    row["computed"] = m.computed.str();
    mismatches.push_back(std::move(row));
  }
  j["mismatches"] = std::move(mismatches);
  return j;
}

// ----------------------------------------------------------------- commands

struct MeansArgs {
  std::string n_text;
};

int run_means(const GlobalOptions& global, const MeansArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  Integer n;
  try {
    n = Integer(args.n_text);
  } catch (const std::exception&) {
    std::cerr << "means: '" << args.n_text << "' is not an integer\n";
    return kUsageError;
  }
  if (n < 1) {
    std::cerr << "means: n must be >= 1\n";
    return kUsageError;
  }

  const DivisorStats stats = divisor_stats(n, true);
  const DivisorMeansRecord record =
      divisor_means_from_sigma(n, stats.sigma0, stats.sigma1, stats.sigma2);
  std::vector<Rational> divisor_list(stats.divisors->begin(),
                                     stats.divisors->end());
  const GeometricValue geo = geometric_mean(divisor_list);

  Json results;
  results["n"] = n.str();
  results["sigma0"] = stats.sigma0.str();
  results["sigma1"] = stats.sigma1.str();
  results["sigma2"] = stats.sigma2.str();
  results["arithmetic"] = record.arithmetic.str();
  Json g;
  if (geo.is_exact()) {
    g["exact"] = geo.exact_value.str();
  } else {
    g["exact"] = nullptr;
    g["radicand"] = geo.radicand.str();
    g["index"] = geo.index;
  }
  g["squared"] = record.geometric_squared.str();
  g["approx"] = geo.approx;
  results["geometric"] = std::move(g);
  results["harmonic"] = record.harmonic.str();
  results["contraharmonic"] = record.contraharmonic.str();
  results["biharmonic"] = record.biharmonic.str();
  results["is_arithmetic"] = record.is_arithmetic;
  results["is_harmonic"] = record.is_harmonic;
  results["is_contraharmonic"] = record.is_contraharmonic;
  results["is_biharmonic"] = record.is_biharmonic;
  if (record.harmonic_value)
    results["harmonic_value"] = record.harmonic_value->str();

  Json params;
  params["n"] = args.n_text;
  emit(global, make_envelope("means", params, results, started), "", {"field", "value"});
  return kOk;
}

struct EnumerateArgs {
  std::string kind;
  std::uint64_t limit = 10000;
  bool check_oeis = false;
  std::string oeis_source = "embedded";
  std::string oeis_cache_dir;
  unsigned oeis_timeout = 10;
};

const char* oeis_id_for(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::arithmetic: return "A003601";
    case SequenceKind::harmonic: return "A001599";
    case SequenceKind::contraharmonic: return "A020487";
    case SequenceKind::biharmonic: return "A210494";
  }
  return "";
}

int run_enumerate(const GlobalOptions& global, const EnumerateArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  const SequenceKind kind = sequence_kind_from_string(args.kind);
  EnumerateOptions opts;
  opts.threads = global.threads;
  const Enumeration enumeration = enumerate_numbers(kind, args.limit, opts);

  Json results;
  results["kind"] = args.kind;
  results["limit"] = args.limit;
  results["count"] = enumeration.terms.size();
  results["terms"] = enumeration.terms;
  if (kind == SequenceKind::harmonic)
    results["harmonic_values"] = enumeration.harmonic_values;

  bool any_fail = false;
  if (args.check_oeis) {
    const auto source = args.oeis_source == "fetch"
                            ? oeis::SequenceSource::fetched
                            : oeis::SequenceSource::embedded;
    auto load = [&](const std::string& id) {
      if (source == oeis::SequenceSource::embedded)
        return oeis::embedded_prefix(id);
      oeis::ClientOptions copts;
      if (!args.oeis_cache_dir.empty()) copts.cache_dir = args.oeis_cache_dir;
      copts.timeout_seconds = args.oeis_timeout;
      oeis::Client client(copts);
      return client.fetch_bfile(id);
    };
    auto check = [&](const std::string& id, const std::vector<std::uint64_t>& xs) {
      std::vector<Integer> computed(xs.begin(), xs.end());
      const auto report = oeis::cross_check(load(id), computed, 1);
      any_fail |= report.verdict == oeis::Verdict::fail;
      return cross_check_json(report, source);
    };
    Json reports = Json::array();
    reports.push_back(check(oeis_id_for(kind), enumeration.terms));
    if (kind == SequenceKind::harmonic)
      reports.push_back(check("A001600", enumeration.harmonic_values));
    results["oeis"] = std::move(reports);
  }

  Json params;
  params["kind"] = args.kind;
  params["limit"] = args.limit;
  params["check_oeis"] = args.check_oeis;
  if (args.check_oeis) params["oeis_source"] = args.oeis_source;
  params["threads"] = global.threads;
  emit(global, make_envelope("enumerate", params, results, started), "terms", {"term"});
  return any_fail ? kVerificationFailure : kOk;
}

struct CrystalsArgs {
  std::uint64_t w = 0;
  bool all = false;
  std::uint64_t limit = 100000;
  bool verify = false;
};

int run_crystals(const GlobalOptions& global, const CrystalsArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  const std::vector<CrystalRecord> records =
      args.all ? generate_all_crystals(args.limit)
               : crystals_up_to(args.w, args.limit);

  Json results;
  results["mode"] = args.all ? "all" : "single-w";
  if (!args.all) results["w"] = args.w;
  results["limit"] = args.limit;
  results["count"] = records.size();
  Json rows = Json::array();
  for (const auto& rec : records) rows.push_back(crystal_json(rec));
  results["crystals"] = std::move(rows);

  bool verified = true;
  if (args.verify) {
    Json failures = Json::array();
    for (const auto& rec : records) {
      const auto found = crystal_decompositions(rec.n);
      const bool present =
          std::any_of(found.begin(), found.end(), [&](const CrystalRecord& d) {
            return d.a == rec.a && d.b == rec.b;
          });
      if (!present) {
        verified = false;
        failures.push_back(crystal_json(rec));
      }
    }
    results["verified"] = verified;
    if (!verified) results["verify_failures"] = std::move(failures);
  }

  Json params;
  if (args.all)
    params["all"] = true;
  else
    params["w"] = args.w;
  params["limit"] = args.limit;
  params["verify"] = args.verify;
  emit(global, make_envelope("crystals", params, results, started), "crystals",
       {"n", "a", "b", "w", "index"});
  if (!verified) {
    std::cerr << "crystals: generated record failed the decomposition oracle\n";
    return kVerificationFailure;
  }
  return kOk;
}

struct ConjectureArgs {
  std::uint64_t limit = 100000;
};

int run_conjecture(const GlobalOptions& global, const ConjectureArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  const ConjectureScanResult scan = conjecture_scan(args.limit, global.threads);

  Json results;
  results["limit"] = scan.limit;
  results["odd_scanned"] = scan.odd_scanned;
  results["crystals_found"] = scan.crystals_found;
  Json findings = Json::array();
  for (const auto& finding : scan.findings) {
    Json f;
    f["n"] = finding.n;
    Json decs = Json::array();
    for (const auto& rec : finding.decompositions)
      decs.push_back(crystal_json(rec));
    f["decompositions"] = std::move(decs);
    findings.push_back(std::move(f));
  }
  results["findings"] = std::move(findings);

  Json params;
  params["limit"] = args.limit;
  params["threads"] = global.threads;
  emit(global, make_envelope("conjecture", params, results, started), "findings",
       {"n", "decompositions"});
  if (!scan.findings.empty()) {
    std::cerr << "conjecture: found " << scan.findings.size()
              << " odd numbers with multiple crystal decompositions\n";
    return kCounterexampleFound;
  }
  return kOk;
}

// ------------------------------------------------------------------- verify

struct VerifyOutcome {
  bool pass = true;
  std::uint64_t checked = 0;
  Json details;              // target-specific scalar payload
  Json counterexample;       // first failure, when any
};

int finish_verify(const GlobalOptions& global, const std::string& target,
                  Json params, VerifyOutcome outcome,
                  std::chrono::steady_clock::time_point started,
                  std::optional<std::uint64_t> seed = std::nullopt) {
  Json results;
  results["target"] = target;
  results["pass"] = outcome.pass;
  results["checked"] = outcome.checked;
  for (const auto& [k, v] : outcome.details.items()) results[k] = v;
  if (!outcome.pass) results["counterexample"] = std::move(outcome.counterexample);
  emit(global, make_envelope("verify", std::move(params), results, started, seed),
       "", {"field", "value"});
  if (!outcome.pass) {
    std::cerr << "verify " << target << ": FAILED\n";
    return kVerificationFailure;
  }
  return kOk;
}

struct VerifyThetaArgs {
  std::uint64_t w_max = 50;
  std::uint64_t n_max = 100;
};

int run_verify_theta(const GlobalOptions& global, const VerifyThetaArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  VerifyOutcome out;
  for (std::uint64_t w = 1; w <= args.w_max; ++w) {
    ++out.checked;
    const bool link = theta_u_link(w, args.n_max);
    const bool same_order3 =
        u_sequence(w, args.n_max) == u_sequence_order3(w, args.n_max);
    if (!link || !same_order3) {
      out.pass = false;
      out.counterexample["w"] = w;
      out.counterexample["theta_link"] = link;
      out.counterexample["order3_agrees"] = same_order3;
      break;
    }
  }
  Json params;
  params["w_max"] = args.w_max;
  params["n_max"] = args.n_max;
  return finish_verify(global, "theta", params, std::move(out), started);
}

struct VerifyConicsArgs {
  std::uint64_t w_max = 50;
  std::uint64_t samples = 30;
};

int run_verify_conics(const GlobalOptions& global, const VerifyConicsArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  VerifyOutcome out;
  for (std::uint64_t w = 1; w <= args.w_max; ++w) {
    ++out.checked;
    bool ok = conic_maps_check(w, args.samples);
    // off-conic probes: the same maps must also preserve non-membership
    const ConicId c{ConicKind::C, w}, c2{ConicKind::C2, w}, c3{ConicKind::C3, w};
    ok = ok && !conic_contains(c, QuadraticInt::unit(w), QuadraticInt::unit(w));
    ok = ok && !conic_contains(c2, Rational(2), Rational(2));
    ok = ok && !conic_contains(c3, Rational(2), Rational(2));
    if (!ok) {
      out.pass = false;
      out.counterexample["w"] = w;
      break;
    }
  }
  Json params;
  params["w_max"] = args.w_max;
  params["samples"] = args.samples;
  return finish_verify(global, "conics", params, std::move(out), started);
}

struct VerifyDiophantineArgs {
  std::uint64_t w = 0;  // 0: scan 1..w_max
  std::uint64_t w_max = 10;
  std::uint64_t bound = 1000;
};

Json pair_list_json(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& v) {
  Json out = Json::array();
  for (const auto& [x, y] : v) out.push_back(Json::array({x, y}));
  return out;
}

int run_verify_diophantine(const GlobalOptions& global,
                           const VerifyDiophantineArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  const std::uint64_t w_lo = args.w == 0 ? 1 : args.w;
  const std::uint64_t w_hi = args.w == 0 ? args.w_max : args.w;
  VerifyOutcome out;
  std::uint64_t solutions = 0;
  for (std::uint64_t w = w_lo; w <= w_hi; ++w) {
    ++out.checked;
    const DiophantineCheck check = check_c2_solutions(w, args.bound, global.threads);
    solutions += solve_c2_bruteforce(w, args.bound, global.threads).size();
    if (!check.complete) {
      out.pass = false;
      out.counterexample["w"] = w;
      out.counterexample["brute_only"] = pair_list_json(check.brute_only);
      out.counterexample["recurrence_only"] = pair_list_json(check.recurrence_only);
      break;
    }
  }
  out.details["solutions_matched"] = solutions;
  Json params;
  if (args.w != 0)
    params["w"] = args.w;
  else
    params["w_max"] = args.w_max;
  params["bound"] = args.bound;
  params["threads"] = global.threads;
  return finish_verify(global, "diophantine", params, std::move(out), started);
}

struct VerifySumIdentityArgs {
  std::uint64_t n_max = 10000;
};

int run_verify_sum_identity(const GlobalOptions& global,
                            const VerifySumIdentityArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  VerifyOutcome out;
  for (std::uint64_t n = 2; n <= args.n_max; ++n) {
    ++out.checked;
    const SumIdentity s = sum_identity_check(Integer(n));
    if (!s.equal) {
      out.pass = false;
      out.counterexample["n"] = n;
      out.counterexample["lhs"] = s.lhs.str();
      out.counterexample["rhs"] = s.rhs.str();
      break;
    }
  }
  Json params;
  params["n_max"] = args.n_max;
  return finish_verify(global, "sum-identity", params, std::move(out), started);
}

struct VerifyEquivalenceArgs {
  std::uint64_t a_max = 500;
};

int run_verify_equivalence(const GlobalOptions& global,
                           const VerifyEquivalenceArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  VerifyOutcome out;
  for (std::uint64_t a = 1; a <= args.a_max; a += 2) {
    for (std::uint64_t b = 1; b <= a; b += 2) {
      ++out.checked;
      if (!equivalence_check(Integer(a), Integer(b))) {
        out.pass = false;
        out.counterexample["a"] = a;
        out.counterexample["b"] = b;
        break;
      }
    }
    if (!out.pass) break;
  }
  Json params;
  params["a_max"] = args.a_max;
  return finish_verify(global, "equivalence", params, std::move(out), started);
}

struct VerifyGeo2Args {
  unsigned max_vars = 3;
  unsigned max_exp = 4;
  bool numeric = false;
  unsigned trials = 50;
  std::size_t numeric_cap = 32;  // skip numeric batches above this divisor count
};

std::vector<ExponentPattern> pattern_grid(unsigned max_vars, unsigned max_exp) {
  std::vector<ExponentPattern> grid;
  std::vector<std::vector<unsigned>> level{{}};
  for (unsigned k = 1; k <= max_vars; ++k) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& prefix : level)
      for (unsigned e = 1; e <= max_exp; ++e) {
        auto ext = prefix;
        ext.push_back(e);
        next.push_back(std::move(ext));
      }
    for (const auto& exps : next) grid.push_back({exps});
    level = std::move(next);
  }
  return grid;
}

std::string pattern_str(const ExponentPattern& pattern) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < pattern.exponents.size(); ++i) {
    if (i) os << ",";
    os << pattern.exponents[i];
  }
  os << ")";
  return os.str();
}

int run_verify_geo2(const GlobalOptions& global, const VerifyGeo2Args& args) {
  const auto started = std::chrono::steady_clock::now();
  const auto grid = pattern_grid(args.max_vars, args.max_exp);
  VerifyOutcome out;
  std::uint64_t numeric_batches = 0, numeric_skipped = 0;
  for (const auto& pattern : grid) {
    ++out.checked;
    if (!verify_geo2_formal(pattern)) {
      out.pass = false;
      out.counterexample["pattern"] = pattern_str(pattern);
      out.counterexample["mode"] = "formal";
      break;
    }
    if (args.numeric) {
      if (pattern.divisor_count() > args.numeric_cap) {
        ++numeric_skipped;
        continue;
      }
      ++numeric_batches;
      const auto batch = verify_geo2_numeric(pattern, args.trials, global.seed);
      if (!batch.ok()) {
        out.pass = false;
        out.counterexample["pattern"] = pattern_str(pattern);
        out.counterexample["mode"] = "numeric";
        out.counterexample["structured_passes"] = batch.structured_passes;
        out.counterexample["control_failures"] = batch.control_failures;
        break;
      }
    }
  }
  out.details["patterns"] = grid.size();
  if (args.numeric) {
    out.details["numeric_batches"] = numeric_batches;
    out.details["numeric_skipped"] = numeric_skipped;
    out.details["trials_per_batch"] = args.trials;
  }
  Json params;
  params["max_vars"] = args.max_vars;
  params["max_exp"] = args.max_exp;
  params["numeric"] = args.numeric;
  if (args.numeric) {
    params["trials"] = args.trials;
    params["numeric_cap"] = args.numeric_cap;
  }
  return finish_verify(global, "geo2", params, std::move(out), started,
                       args.numeric ? std::optional<std::uint64_t>(global.seed)
                                    : std::nullopt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact divisor means, integer-sequence enumeration, crystal\n"
      "classification and identity verification."};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads for scans")
      ->capture_default_str();
  app.add_option("--seed", global.seed, "Seed for randomized checks")
      ->capture_default_str();

  MeansArgs means_args;
  auto* means_cmd =
      app.add_subcommand("means", "Divisor means and integrality flags of n");
  means_cmd->add_option("n", means_args.n_text, "The integer to analyze")
      ->required();

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "List all n <= limit whose chosen divisor mean is integral");
  enum_cmd
      ->add_option("kind", enum_args.kind,
                   "arithmetic | harmonic | contraharmonic | biharmonic")
      ->required()
      ->check(CLI::IsMember(
          {"arithmetic", "harmonic", "contraharmonic", "biharmonic"}));
  enum_cmd->add_option("--limit", enum_args.limit, "Upper bound (inclusive)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  enum_cmd->add_flag("--check-oeis", enum_args.check_oeis,
                     "Cross-check the result against OEIS data");
  enum_cmd
      ->add_option("--oeis-source", enum_args.oeis_source,
                   "embedded: built-in prefixes; fetch: b-file download")
      ->check(CLI::IsMember({"embedded", "fetch"}))
      ->capture_default_str();
  enum_cmd->add_option("--oeis-cache-dir", enum_args.oeis_cache_dir,
                       "b-file cache directory (default: BIHARMONIC_OEIS_CACHE "
                       "or the user cache dir)");
  enum_cmd
      ->add_option("--oeis-timeout", enum_args.oeis_timeout,
                   "HTTP timeout in seconds")
      ->capture_default_str();

  CrystalsArgs crystals_args;
  auto* crystals_cmd = app.add_subcommand(
      "crystals", "Generate crystals from the recurrence classification");
  auto* w_opt = crystals_cmd->add_option("--w", crystals_args.w,
                                         "Single conic parameter w >= 1")
                    ->check(CLI::PositiveNumber);
  auto* all_opt = crystals_cmd->add_flag("--all", crystals_args.all,
                                         "Scan every w admitting N <= limit");
  w_opt->excludes(all_opt);
  all_opt->excludes(w_opt);
  crystals_cmd->add_option("--limit", crystals_args.limit, "Largest N to emit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  crystals_cmd->add_flag("--verify", crystals_args.verify,
                         "Re-check every record against the divisor-pair oracle");

  ConjectureArgs conjecture_args;
  auto* conjecture_cmd = app.add_subcommand(
      "conjecture",
      "Scan odd N <= limit for multiple crystal decompositions");
  conjecture_cmd->add_option("--limit", conjecture_args.limit, "Scan bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* verify_cmd =
      app.add_subcommand("verify", "Brute-force verification of the identities");
  verify_cmd->require_subcommand(1);

  VerifyThetaArgs theta_args;
  auto* theta_cmd = verify_cmd->add_subcommand(
      "theta", "Doubling-map link 2u_n - 1 and the order-3 recurrence form");
  theta_cmd->add_option("--w-max", theta_args.w_max)->capture_default_str();
  theta_cmd->add_option("--n-max", theta_args.n_max)->capture_default_str();

  VerifyConicsArgs conics_args;
  auto* conics_cmd = verify_cmd->add_subcommand(
      "conics", "Conic memberships and the three correspondences");
  conics_cmd->add_option("--w-max", conics_args.w_max)->capture_default_str();
  conics_cmd->add_option("--samples", conics_args.samples)->capture_default_str();

  VerifyDiophantineArgs dio_args;
  auto* dio_cmd = verify_cmd->add_subcommand(
      "diophantine",
      "Brute-force solutions of (x+y-1)^2 = wxy vs consecutive u-pairs");
  auto* dio_w = dio_cmd->add_option("--w", dio_args.w, "Single w")
                    ->check(CLI::PositiveNumber);
  auto* dio_wmax = dio_cmd->add_option("--w-max", dio_args.w_max, "Scan 1..w-max")
                       ->capture_default_str();
  dio_w->excludes(dio_wmax);
  dio_wmax->excludes(dio_w);
  dio_cmd->add_option("--bound", dio_args.bound, "Coordinate bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  VerifySumIdentityArgs sum_args;
  auto* sum_cmd = verify_cmd->add_subcommand(
      "sum-identity", "Paired-divisor sum against (n+1)s1 - (s2 + n*s0)");
  sum_cmd->add_option("--n-max", sum_args.n_max)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  VerifyEquivalenceArgs equiv_args;
  auto* equiv_cmd = verify_cmd->add_subcommand(
      "equivalence",
      "All-or-none integrality of B, F, P, Q and the linking identities");
  equiv_cmd->add_option("--a-max", equiv_args.a_max)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  VerifyGeo2Args geo2_args;
  auto* geo2_cmd = verify_cmd->add_subcommand(
      "geo2", "G^2 = H*A on divisor lists, symbolically and numerically");
  geo2_cmd->add_option("--max-vars", geo2_args.max_vars)
      ->check(CLI::Range(1u, 4u))
      ->capture_default_str();
  geo2_cmd->add_option("--max-exp", geo2_args.max_exp)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  geo2_cmd->add_flag("--numeric", geo2_args.numeric,
                     "Also run randomized numeric batches with controls");
  geo2_cmd->add_option("--trials", geo2_args.trials, "Trials per numeric batch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  geo2_cmd
      ->add_option("--numeric-cap", geo2_args.numeric_cap,
                   "Skip numeric batches for divisor sets larger than this")
      ->capture_default_str();

  // accept --format/--threads/--seed on either side of the subcommand
  const auto all = [](CLI::App*) { return true; };
  for (CLI::App* sub : app.get_subcommands(all)) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands(all)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*means_cmd) return run_means(global, means_args);
    if (*enum_cmd) return run_enumerate(global, enum_args);
    if (*crystals_cmd) {
      if (!crystals_args.all && crystals_args.w == 0) {
        std::cerr << "crystals: exactly one of --w or --all is required\n";
        return kUsageError;
      }
      return run_crystals(global, crystals_args);
    }
    if (*conjecture_cmd) return run_conjecture(global, conjecture_args);
    if (*verify_cmd) {
      if (*theta_cmd) return run_verify_theta(global, theta_args);
      if (*conics_cmd) return run_verify_conics(global, conics_args);
      if (*dio_cmd) return run_verify_diophantine(global, dio_args);
      if (*sum_cmd) return run_verify_sum_identity(global, sum_args);
      if (*equiv_cmd) return run_verify_equivalence(global, equiv_args);
      if (*geo2_cmd) return run_verify_geo2(global, geo2_args);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOperationalError;
  }
  std::cerr << "no command selected\n";
  return kUsageError;
}
