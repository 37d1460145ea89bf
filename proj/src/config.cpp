#include "ghk/config.hpp"

#include <omp.h>

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ghk {

std::vector<std::uint32_t> parse_primes(const std::string& csv) {
    std::vector<std::uint32_t> out;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        unsigned long v = std::stoul(item);
        if (v < 3 || v > 0xFFFFFFFFul) throw std::invalid_argument("prime out of range: " + item);
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

Config Config::from_environment() {
    Config c;
    if (const char* t = std::getenv("GHK_THREADS")) c.threads = std::atoi(t);
    if (const char* d = std::getenv("GHK_CACHE_DIR")) c.cache_dir = d;
    if (const char* p = std::getenv("GHK_PRIMES")) c.primes = parse_primes(p);
    return c;
}

void Config::apply() const {
    if (threads > 0) omp_set_num_threads(threads);
}

}  // namespace ghk
