#ifndef LCHOOSE_ERROR_HPP
#define LCHOOSE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lchoose {

/// Thrown when an enumeration or node budget is exceeded in a context that
/// cannot report an explicit inconclusive status.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lchoose

#endif
