#include "bogocert/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace bogocert {

namespace {
constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

std::uint64_t initial_seed() {
    if (const char* env = std::getenv("BOGOCERT_SEED")) {
        try {
            return std::stoull(std::string(env));
        } catch (...) {
            return kDefaultSeed;
        }
    }
    return kDefaultSeed;
}

std::atomic<std::uint64_t>& seed_slot() {
    static std::atomic<std::uint64_t> s{initial_seed()};
    return s;
}
} // namespace

std::uint64_t global_seed() { return seed_slot().load(); }
void set_global_seed(std::uint64_t seed) { seed_slot().store(seed); }

} // namespace bogocert
