#ifndef DIFFPATH_ERRORS_HPP
#define DIFFPATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace diffpath {

/// Thrown when an iterative or marching scheme breaks down (failed bracket,
/// singular tridiagonal pivot, degenerate cell velocity). Distinct from the
/// std::logic_error family so callers can map it to a separate exit status.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace diffpath

#endif  // DIFFPATH_ERRORS_HPP
