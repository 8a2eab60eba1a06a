#include "canonlab/config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace canonlab {

Limits default_limits() {
    Limits limits;
    if (const char* env = std::getenv("CANONLAB_CAP")) {
        std::size_t value = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec == std::errc() && ptr == end && value > 0) {
            limits.max_elements = value;
        }
    }
    return limits;
}

CapExceeded::CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
    : std::runtime_error(what + " size " + std::to_string(size) + " exceeds cap " +
                         std::to_string(cap)),
      size_(size),
      cap_(cap) {}

void require_within_cap(const char* what, std::size_t size, std::size_t cap) {
    if (size > cap) throw CapExceeded(what, size, cap);
}

}  // namespace canonlab
