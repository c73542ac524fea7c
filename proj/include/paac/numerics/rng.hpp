#ifndef PAAC_NUMERICS_RNG_HPP
#define PAAC_NUMERICS_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace paac {

// Deterministic random source. All stochastic draws in the project go
// through this class so that a (seed, call sequence) pair reproduces
// bit-identical values independent of the standard library's
// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1).
    double uniform();

    // Uniform in [lo, hi).
    double uniform(double lo, double hi);

    // Standard normal via Box-Muller (no cached second value).
    double normal();

    // Uniform integer in [0, n).
    std::uint64_t integer(std::uint64_t n);

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

// Derives a named child seed from a master seed. Used for the harness's
// independent streams (env, agent-init, exploration, evaluation).
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream, std::uint64_t index = 0);

}  // namespace paac

#endif
