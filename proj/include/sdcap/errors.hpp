#pragma once

#include <stdexcept>

namespace sdcap {

// Enumeration or grid request beyond the configured work budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sdcap
