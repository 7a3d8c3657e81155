#ifndef BOGOCERT_CONFIG_HPP
#define BOGOCERT_CONFIG_HPP

#include <cstdint>

namespace bogocert {

/// Seed for the kernel's pseudorandom choices (equal-degree splitting).
/// Defaults to a fixed constant; the BOGOCERT_SEED environment variable
/// overrides it at process start. Factor output is canonicalized, so the
/// seed never changes results, only internal search paths.
std::uint64_t global_seed();
void set_global_seed(std::uint64_t seed);

} // namespace bogocert

#endif
