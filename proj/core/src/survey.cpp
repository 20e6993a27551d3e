#include "lefschetz/survey.hpp"

#include "lefschetz/report.hpp"
#include "lefschetz/version.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lefschetz {

std::array<std::int64_t, 3> canonical_alpha(std::int64_t l,
                                            const std::array<std::int64_t, 3>& a) {
  std::array<std::int64_t, 3> best{l, l, l};
  for (std::int64_t c = 1; c < l; ++c) {
    std::array<std::int64_t, 3> scaled{a[0] * c % l, a[1] * c % l, a[2] * c % l};
    std::sort(scaled.begin(), scaled.end());
    do {
      if (scaled < best) best = scaled;
    } while (std::next_permutation(scaled.begin(), scaled.end()));
  }
  return best;
}

std::vector<std::array<std::int64_t, 3>> enumerate_alpha(std::int64_t l, bool dedupe) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t a0 = 1; a0 < l; ++a0) {
    for (std::int64_t a1 = 1; a1 < l; ++a1) {
      const std::int64_t a2 = ((-(a0 + a1)) % l + l) % l;
      if (a2 == 0) continue;
      const std::array<std::int64_t, 3> a{a0, a1, a2};
      if (!dedupe || canonical_alpha(l, a) == a) out.push_back(a);
    }
  }
  return out;
}

std::optional<OutputFormat> format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

namespace {

std::string cache_key(std::int64_t p, std::int64_t l, const std::array<std::int64_t, 3>& a,
                      Mode mode) {
  std::ostringstream os;
  os << p << ':' << l << ':' << a[0] << ',' << a[1] << ',' << a[2] << ':' << to_string(mode)
     << ':' << kEngineVersion;
  return os.str();
}

std::map<std::string, ClassificationRecord> load_cache(const std::string& path) {
  std::map<std::string, ClassificationRecord> cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key") || !j.contains("record")) continue;
    try {
      cache.emplace(j.at("key").get<std::string>(), record_from_json(j.at("record")));
    } catch (const std::exception&) {
      // stale or foreign cache line; recompute instead
    }
  }
  return cache;
}

void atomic_write(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void save_cache(const std::string& path, const std::map<std::string, ClassificationRecord>& cache) {
  std::ostringstream os;
  for (const auto& [key, rec] : cache) {
    nlohmann::ordered_json j;
    j["key"] = key;
    j["record"] = record_to_json(rec);
    os << j.dump() << '\n';
  }
  atomic_write(path, os.str());
}

}  // namespace

SurveySummary run_survey(const SurveyConfig& config, std::ostream& log) {
  for (std::int64_t p : config.p_list) {
    if (!is_prime(p)) throw std::invalid_argument("survey: p list contains a non-prime");
  }
  for (std::int64_t l : config.l_list) {
    if (!is_prime(l) || l == 2) throw std::invalid_argument("survey: l list must hold odd primes");
  }
  for (std::int64_t p : config.p_list) {
    for (std::int64_t l : config.l_list) {
      if (p == l) throw std::invalid_argument("survey: p = l pair in config");
    }
  }

  std::map<std::string, ClassificationRecord> cache;
  if (!config.cache_path.empty()) cache = load_cache(config.cache_path);

  struct Job {
    std::int64_t p, l;
    std::array<std::int64_t, 3> alpha;
  };
  std::vector<Job> jobs;
  for (std::int64_t p : config.p_list) {
    for (std::int64_t l : config.l_list) {
      for (const auto& a : enumerate_alpha(l, config.dedupe)) jobs.push_back({p, l, a});
    }
  }

  SurveySummary summary;
  std::vector<ClassificationRecord> records(jobs.size());
  std::vector<char> from_cache(jobs.size(), 0);
  std::string first_error;
  std::mutex err_mu;

  // Contexts are immutable and classification is pure, so jobs distribute
  // freely; results land in their slots and file output stays ordered.
  const int workers = std::max(1, config.workers);
  std::map<std::pair<std::int64_t, std::int64_t>, ModulusContext> contexts;
  for (std::int64_t p : config.p_list) {
    for (std::int64_t l : config.l_list) contexts.emplace(std::make_pair(p, l), build_context(p, l));
  }

  {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        const Job& job = jobs[i];
        try {
          const std::string key = cache_key(job.p, job.l, job.alpha, config.mode);
          auto it = cache.find(key);
          if (it != cache.end()) {
            records[i] = it->second;
            from_cache[i] = 1;
          } else {
            records[i] = classify(job.alpha, contexts.at({job.p, job.l}), config.mode);
          }
        } catch (const std::exception& ex) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (first_error.empty()) first_error = ex.what();
        }
      }
    };
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (!first_error.empty()) {
    summary.ok = false;
    log << "engine error: " << first_error << '\n';
    throw engine_error(first_error);
  }

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    ++summary.rows;
    ++summary.rule_counts[to_string(records[i].rule)];
    if (!records[i].verdict) summary.negatives.push_back(records[i]);
    if (from_cache[i]) ++summary.cache_hits;
  }

  if (!config.out_path.empty()) {
    std::ostringstream os;
    if (config.format == OutputFormat::Csv) {
      os << csv_header() << '\n';
      for (const auto& rec : records) os << record_to_csv(rec) << '\n';
    } else {
      for (const auto& rec : records) os << record_to_json(rec).dump() << '\n';
    }
    atomic_write(config.out_path, os.str());
  }

  if (!config.cache_path.empty()) {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      cache.emplace(cache_key(jobs[i].p, jobs[i].l, jobs[i].alpha, config.mode), records[i]);
    }
    save_cache(config.cache_path, cache);
  }

  log << "survey: " << summary.rows << " rows";
  if (summary.cache_hits > 0) log << " (" << summary.cache_hits << " from cache)";
  log << '\n';
  for (const auto& [rule, count] : summary.rule_counts) {
    log << "  " << rule << ": " << count << '\n';
  }
  if (summary.negatives.empty()) {
    log << "  negative verdicts: none\n";
  } else {
    log << "  negative verdicts: " << summary.negatives.size() << '\n';
    for (const auto& rec : summary.negatives) {
      log << "    p=" << rec.p << " l=" << rec.l << " alpha=(" << rec.alpha[0] << ','
          << rec.alpha[1] << ',' << rec.alpha[2] << ") witnesses k=";
      for (std::size_t i = 0; i < rec.witnesses.size(); ++i) {
        if (i) log << ';';
        log << rec.witnesses[i];
      }
      log << '\n';
    }
  }
  return summary;
}

}  // namespace lefschetz
