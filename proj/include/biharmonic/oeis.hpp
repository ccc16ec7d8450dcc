#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "biharmonic/numeric.hpp"

#if defined(BIHARMONIC_WITH_TLS) && !defined(CPPHTTPLIB_OPENSSL_SUPPORT)
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

namespace biharmonic::oeis {

struct SequenceTerm {
  long long index = 0;
  Integer value;

  bool operator==(const SequenceTerm& rhs) const {
    return index == rhs.index && value == rhs.value;
  }
};

enum class SequenceSource { embedded, fetched };

struct SequenceRecord {
  std::string id;  // 'A' followed by six digits
  std::vector<SequenceTerm> terms;
  SequenceSource source = SequenceSource::embedded;
};

inline bool valid_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < 7; ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(std::size_t line, const std::string& what)
      : std::runtime_error("b-file line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses the standard b-file format: one "index value" pair per line,
// '#' starts a comment, blank lines are skipped. Indices must be strictly
// increasing.
inline SequenceRecord parse_bfile(const std::string& id,
                                  const std::string& text,
                                  SequenceSource source = SequenceSource::fetched) {
  if (!valid_id(id))
    throw std::invalid_argument("parse_bfile: malformed OEIS id: " + id);
  SequenceRecord record;
  record.id = id;
  record.source = source;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string idx_tok, val_tok, extra;
    if (!(fields >> idx_tok)) continue;  // blank or comment-only line
    if (!(fields >> val_tok))
      throw BFileParseError(line_no, "missing value after index");
    if (fields >> extra)
      throw BFileParseError(line_no, "trailing token '" + extra + "'");
    long long index = 0;
    try {
      std::size_t used = 0;
      index = std::stoll(idx_tok, &used);
      if (used != idx_tok.size()) throw std::invalid_argument(idx_tok);
    } catch (const std::exception&) {
      throw BFileParseError(line_no, "bad index '" + idx_tok + "'");
    }
    Integer value;
    try {
      value = Integer(val_tok);
    } catch (const std::exception&) {
      throw BFileParseError(line_no, "bad value '" + val_tok + "'");
    }
    if (!record.terms.empty() && index <= record.terms.back().index)
      throw BFileParseError(line_no, "indices not strictly increasing");
    record.terms.push_back({index, std::move(value)});
  }
  return record;
}

inline std::string to_bfile(const SequenceRecord& record) {
  std::ostringstream out;
  for (const auto& term : record.terms)
    out << term.index << " " << term.value.str() << "\n";
  return out.str();
}

// Pinned prefixes for the five sequences used as enumeration oracles.
// Exactly these terms, never more: the point of the pin is that a silent
// upstream change cannot shift the baseline.
inline SequenceRecord embedded_prefix(const std::string& id) {
  static const std::unordered_map<std::string, std::vector<long long>> table = {
      // arithmetic numbers
      {"A003601", {1,  3,  5,  6,  7,  11, 13, 14, 15, 17, 19,
                   20, 21, 22, 23, 27, 29, 30, 31, 33, 35, 37}},
      // integers with integral contraharmonic divisor mean
      {"A020487", {1,  4,  9,   16,  20,  25,  36,  49,  50,  64,
                   81, 100, 117, 121, 144, 169, 180, 196, 200, 225}},
      // harmonic (Ore) numbers
      {"A001599", {1, 6, 28, 140, 270, 496, 672, 1638, 2970, 6200, 8128, 8190,
                   18600, 18620, 27846, 30240}},
      // the corresponding integer values of H(n)
      {"A001600", {1, 2, 3, 5, 6, 5, 8, 9, 11, 10, 7, 15, 15, 14, 17, 24}},
      // biharmonic numbers
      {"A210494", {1, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 35, 37, 41, 43, 47,
                   53, 59, 61}},
  };
  const auto it = table.find(id);
  if (it == table.end())
    throw std::invalid_argument("embedded_prefix: no embedded data for " + id);
  SequenceRecord record;
  record.id = id;
  record.source = SequenceSource::embedded;
  long long index = 1;
  for (long long v : it->second) record.terms.push_back({index++, Integer(v)});
  return record;
}

inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("BIHARMONIC_OEIS_CACHE"); env && *env)
    return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "biharmonic" / "oeis";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "biharmonic" / "oeis";
  return std::filesystem::temp_directory_path() / "biharmonic-oeis";
}

struct ClientOptions {
  std::string base_url = "https://oeis.org";
  std::filesystem::path cache_dir;  // empty: env var / platform default
  unsigned timeout_seconds = 10;
};

// Fetches b-files by id with an on-disk cache of the raw bytes, one file
// per id. A cache entry is written once via temp-file + rename and then
// treated as immutable; fetchers of the same id serialize on a per-id
// mutex while distinct ids proceed independently.
class Client {
 public:
  explicit Client(ClientOptions options = {}) : options_(std::move(options)) {
    if (options_.cache_dir.empty()) options_.cache_dir = default_cache_dir();
  }

  const std::filesystem::path& cache_dir() const { return options_.cache_dir; }

  std::filesystem::path cache_path(const std::string& id) const {
    return options_.cache_dir / (id + ".txt");
  }

  SequenceRecord fetch_bfile(const std::string& id) {
    if (!valid_id(id))
      throw std::invalid_argument("fetch_bfile: malformed OEIS id: " + id);
    std::lock_guard<std::mutex> guard(mutex_for(id));
    const auto path = cache_path(id);
    if (!std::filesystem::exists(path)) {
      const std::string body = http_get(bfile_path(id));
      std::filesystem::create_directories(options_.cache_dir);
      const auto tmp = path.string() + ".tmp";
      {
        std::ofstream out(tmp, std::ios::binary);
        out.write(body.data(), static_cast<std::streamsize>(body.size()));
        if (!out)
          throw std::runtime_error("fetch_bfile: cannot write cache file " + tmp);
      }
      std::filesystem::rename(tmp, path);
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bfile(id, buf.str(), SequenceSource::fetched);
  }

  static std::string bfile_path(const std::string& id) {
    return "/" + id + "/b" + id.substr(1) + ".txt";
  }

 private:
  std::mutex& mutex_for(const std::string& id) {
    std::lock_guard<std::mutex> guard(registry_mutex_);
    auto& slot = mutexes_[id];
    if (!slot) slot = std::make_unique<std::mutex>();
    return *slot;
  }

  std::string http_get(const std::string& path) {
#if !defined(CPPHTTPLIB_OPENSSL_SUPPORT)
    if (options_.base_url.rfind("https://", 0) == 0)
      throw std::runtime_error(
          "fetch_bfile: built without TLS support; use an http:// base URL "
          "or a populated cache");
#endif
    httplib::Client http(options_.base_url);
    http.set_connection_timeout(options_.timeout_seconds, 0);
    http.set_read_timeout(options_.timeout_seconds, 0);
    http.set_follow_location(true);
    auto res = http.Get(path);
    if (!res)
      throw std::runtime_error("fetch_bfile: network error fetching " + path +
                               " from " + options_.base_url + ": " +
                               httplib::to_string(res.error()));
    if (res->status != 200)
      throw std::runtime_error("fetch_bfile: HTTP " + std::to_string(res->status) +
                               " fetching " + path);
    return res->body;
  }

  ClientOptions options_;
  std::mutex registry_mutex_;
  std::unordered_map<std::string, std::unique_ptr<std::mutex>> mutexes_;
};

enum class Verdict { pass, fail, insufficient_overlap };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::insufficient_overlap: return "insufficient-overlap";
  }
  return "?";
}

struct Mismatch {
  long long index = 0;
  Integer expected;  // reference record value
  Integer computed;
};

struct CrossCheckReport {
  std::string id;
  std::size_t compared = 0;
  std::vector<Mismatch> mismatches;
  Verdict verdict = Verdict::insufficient_overlap;
};

// Compares computed terms (indexed consecutively from start_index) with a
// reference record over their index overlap. Disagreement is reported,
// never "corrected".
inline CrossCheckReport cross_check(const SequenceRecord& reference,
                                    const std::vector<Integer>& computed,
                                    long long start_index) {
  if (computed.empty())
    throw std::invalid_argument("cross_check: computed sequence is empty");
  CrossCheckReport report;
  report.id = reference.id;
  for (const auto& term : reference.terms) {
    const long long offset = term.index - start_index;
    if (offset < 0 || offset >= static_cast<long long>(computed.size())) continue;
    ++report.compared;
    const Integer& ours = computed[static_cast<std::size_t>(offset)];
    if (ours != term.value) report.mismatches.push_back({term.index, term.value, ours});
  }
  report.verdict = report.compared == 0 ? Verdict::insufficient_overlap
                   : report.mismatches.empty() ? Verdict::pass
                                               : Verdict::fail;
  return report;
}

}  // namespace biharmonic::oeis
