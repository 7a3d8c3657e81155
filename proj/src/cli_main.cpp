#include "bogocert/errors.hpp"
#include "bogocert/jobs.hpp"

#include <future>
#include <iostream>
#include <vector>

namespace bogocert {

namespace {

const char* kUsage =
    "usage: bogocert <command> [--key value | --key=value]...\n"
    "       bogocert run [--jobs N] <jobfile>...\n"
    "\n"
    "commands:\n"
    "  height     --field F --elem C [--digits N] [--format text|json] [--out PATH]\n"
    "  split      --field F --ell L [--format text|json] [--out PATH]\n"
    "  kummer     --field F --elem C --ell L [--rho R] [--format text|json] [--out PATH]\n"
    "  certify    --field F --ell L --rho R --attest TEXT [--elem C] [--out PATH]\n"
    "  verify     --in CERT.json\n"
    "  construct  --field F --ell L [--format text|json] [--out PATH]\n"
    "  witnesses  --b B [--kmax K] [--eps E] [--format text|json|csv] [--out PATH]\n"
    "  tower      [--steps N] [--bstart B] [--format text|json|csv] [--out PATH]\n"
    "  bounds     --op silverman|garza|prefall|relbocrit|threshold|theta|tower42 ...\n"
    "  run        [--jobs N] JOBFILE...   (job files: one 'key value' per line)\n"
    "\n"
    "--field takes either a polynomial like \"x^2-x-1\" or coefficients \"-1,-1,1\"\n"
    "(constant first); --elem takes power-basis coordinates \"num/den,...\".\n"
    "BOGOCERT_SEED overrides the kernel's fixed pseudorandom seed.\n";

struct ParsedArgs {
    JobSpec job;
    std::vector<std::string> positional;
};

ParsedArgs parse_args(int argc, char** argv) {
    ParsedArgs parsed;
    parsed.job.command = argv[1];
    int i = 2;
    while (i < argc) {
        std::string tok = argv[i];
        if (tok.rfind("--", 0) == 0) {
            std::string key = tok.substr(2);
            std::string value;
            auto eq = key.find('=');
            if (eq != std::string::npos) {
                value = key.substr(eq + 1);
                key = key.substr(0, eq);
            } else if (i + 1 < argc) {
                value = argv[++i];
            } else {
                throw_parse("cli", "flag --" + key + " needs a value");
            }
            parsed.job.options[key] = value;
        } else {
            parsed.positional.push_back(tok);
        }
        ++i;
    }
    return parsed;
}

int run_batch(const ParsedArgs& parsed) {
    if (parsed.positional.empty()) {
        std::cerr << "error category=parse module=cli: no job files given\n";
        return 2;
    }
    long jobs = 1;
    if (parsed.job.has("jobs")) jobs = parsed.job.get_long("jobs", 1);
    if (jobs < 1) jobs = 1;

    std::vector<std::future<JobResult>> futures;
    futures.reserve(parsed.positional.size());
    size_t next = 0;
    std::vector<JobResult> results(parsed.positional.size());
    while (next < parsed.positional.size()) {
        size_t batch = std::min<size_t>(static_cast<size_t>(jobs),
                                        parsed.positional.size() - next);
        futures.clear();
        for (size_t j = 0; j < batch; ++j) {
            const std::string& path = parsed.positional[next + j];
            futures.push_back(std::async(std::launch::async, [path]() {
                try {
                    return run(JobSpec::from_file(path));
                } catch (const Error& e) {
                    JobResult r;
                    r.exit_code = e.category() == ErrorCategory::io ? 4 : 2;
                    r.error = std::string("error category=") + category_name(e.category()) +
                              " module=" + e.module() + ": " + e.what() + "\n";
                    return r;
                }
            }));
        }
        for (size_t j = 0; j < batch; ++j) results[next + j] = futures[j].get();
        next += batch;
    }

    int exit_code = 0;
    for (size_t j = 0; j < results.size(); ++j) {
        std::cout << "== " << parsed.positional[j] << "\n" << results[j].output;
        if (!results[j].error.empty()) std::cerr << results[j].error;
        if (results[j].exit_code != 0 && exit_code == 0) exit_code = results[j].exit_code;
    }
    return exit_code;
}

} // namespace

int run_main(int argc, char** argv) {
    if (argc < 2 || std::string(argv[1]) == "--help" || std::string(argv[1]) == "-h" ||
        std::string(argv[1]) == "help") {
        std::cout << kUsage;
        return argc < 2 ? 2 : 0;
    }
    ParsedArgs parsed;
    try {
        parsed = parse_args(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error category=parse module=cli: " << e.what() << "\n";
        return 2;
    }
    if (parsed.job.command == "run") return run_batch(parsed);
    if (!parsed.positional.empty()) {
        std::cerr << "error category=parse module=cli: unexpected argument '"
                  << parsed.positional[0] << "'\n";
        return 2;
    }
    JobResult result = run(parsed.job);
    std::cout << result.output;
    if (!result.error.empty()) std::cerr << result.error;
    return result.exit_code;
}

} // namespace bogocert
