#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace dgo {

// Invalid user-supplied configuration: bad bit widths, budgets, unknown names.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Violations of the bit-string <-> real mapping contract: length mismatches,
// out-of-box points, malformed variable specs.
class encoding_error : public std::runtime_error {
public:
    explicit encoding_error(const std::string& what) : std::runtime_error(what) {}
};

// Resolution refinement would exceed the representable per-variable width.
class resolution_error : public std::runtime_error {
public:
    explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

// An objective produced NaN or failed during evaluation. Carries the index of
// the child being evaluated, or npos for the parent / a standalone point.
class evaluation_error : public std::runtime_error {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    explicit evaluation_error(const std::string& what, std::size_t child_index = npos)
        : std::runtime_error(what), child_index_(child_index) {}

    std::size_t child_index() const noexcept { return child_index_; }

private:
    std::size_t child_index_;
};

}  // namespace dgo
