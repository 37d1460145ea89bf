#ifndef GHK_CONFIG_HPP
#define GHK_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ghk {

// Runtime configuration. Precedence: CLI flags > environment > defaults;
// the CLI starts from from_environment() and overwrites with given flags.
struct Config {
    int threads = 0;            // 0 = library default
    std::string cache_dir;      // empty = no caching
    std::vector<std::uint32_t> primes;  // empty = kDefaultPrimes

    // Reads GHK_THREADS, GHK_CACHE_DIR, GHK_PRIMES (comma-separated).
    static Config from_environment();

    // Applies the thread count to the OpenMP runtime.
    void apply() const;
};

std::vector<std::uint32_t> parse_primes(const std::string& csv);

}  // namespace ghk

#endif
