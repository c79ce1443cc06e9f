#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tbl/finab.hpp"
#include "tbl/scenario.hpp"

namespace tbl {

inline constexpr const char* kVersion = "0.1.0";

/** splitmix64; fixed across platforms so seeded runs are reproducible. */
class Sampler {
  public:
    explicit Sampler(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long below(long bound) { return static_cast<long>(next() % static_cast<uint64_t>(bound)); }

  private:
    uint64_t state_;
};

/**
 * Report accumulator: human-readable lines plus the machine-readable
 * KEY<TAB>VALUE summary used by the test harnesses.
 */
class Report {
  public:
    void line(const std::string& s) { human_ << s << '\n'; }
    void kv(const std::string& key, const std::string& value) {
        machine_.emplace_back(key, value);
    }
    void kv(const std::string& key, long value) { kv(key, std::to_string(value)); }

    std::string machine_text() const;
    std::string render() const; // human section + summary section

  private:
    std::ostringstream human_;
    std::vector<std::pair<std::string, std::string>> machine_;
};

struct RunResult {
    std::string report;
    int exit_code = 0; // 0 ok, 1 assertion failure
};

struct RunOptions {
    std::optional<uint64_t> seed;
    std::optional<int> precision;
    std::optional<long> samples;
};

// Reusable harnesses (also driven by the acceptance suite).

struct EquivStats {
    long constructed_pairs = 0; // built to be strong-equivalent
    long violations = 0;        // strong-equivalent with differing evaluation
    long independent_pairs = 0;
    long contrapositive_failures = 0; // differing evaluation yet strong-equivalent
};

EquivStats run_equiv_harness(const SchemeModel& model, int precision, long l_bound, long pairs,
                             uint64_t seed, const std::vector<ClassExpr>& extra_classes,
                             Report* report);

struct Thm16Stats {
    long checked = 0;
    long equal = 0;
    long attempts = 0; // including samples rejected by preconditions
};

Thm16Stats run_thm16_harness(const SchemeModel& model, int precision, long n, long samples,
                             uint64_t seed, Report* report);

RunResult run(const std::string& subcommand, const Scenario& scenario, const RunOptions& opts);
RunResult run_repro(const std::string& name, const RunOptions& opts);
const std::vector<std::string>& repro_names();

} // namespace tbl
