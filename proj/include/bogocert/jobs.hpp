#ifndef BOGOCERT_JOBS_HPP
#define BOGOCERT_JOBS_HPP

#include <map>
#include <string>
#include <vector>

namespace bogocert {

/// A fully-specified unit of work: one command plus its options. Flags and the
/// job-file format share the same keys (one key per flag, "key value" lines).
struct JobSpec {
    std::string command;
    std::map<std::string, std::string> options;

    static JobSpec from_file(const std::string& path);

    bool has(const std::string& key) const { return options.count(key) > 0; }
    std::string get(const std::string& key, const std::string& fallback = "") const;
    std::string require(const std::string& key) const;
    long get_long(const std::string& key, long fallback) const;
};

struct JobResult {
    int exit_code = 0;
    std::string output; // stdout payload (or --out file content)
    std::string error;  // stderr payload
};

/// Executes one job. Deterministic output for identical inputs; errors carry a
/// machine-readable category line and a per-category exit code
/// (2 parse, 3 domain/precondition, 4 io, 5 limit/internal; 1 failed verify).
JobResult run(const JobSpec& job);

/// Full CLI entry point (subcommands, flags, job files, --jobs batching).
int run_main(int argc, char** argv);

} // namespace bogocert

#endif
