#pragma once

#include <stdexcept>
#include <string>

namespace homw1 {

// Invalid parameters, malformed specs or files.  CLI exit code 2.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A size guard refused the computation.  Never a wrong answer.  CLI exit code 2.
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Configurable size guards shared by the expensive operations.
struct Guards {
    std::size_t max_poset_elements = 200000;
    std::size_t max_simplices = 5000000;
    int max_chromatic_vertices = 12;
};

}  // namespace homw1
