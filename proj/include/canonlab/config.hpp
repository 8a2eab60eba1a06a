#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace canonlab {

// Size guards. Everything downstream of a poset is exponential in its size,
// so the defaults are deliberately small and every override is explicit.
struct Limits {
    std::size_t max_elements = 64;     // poset size for enumeration
    std::size_t max_canon_size = 12;   // |P| * n for sums over all of S_n
    std::size_t max_sweep_edges = 20;  // removable edges in a subposet sweep
};

// Limits with `max_elements` taken from CANONLAB_CAP when set.
Limits default_limits();

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::size_t size, std::size_t cap);

    std::size_t size() const noexcept { return size_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

void require_within_cap(const char* what, std::size_t size, std::size_t cap);

}  // namespace canonlab
