#ifndef EMN_ERRORS_HPP
#define EMN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emn {

/// Input text could not be decoded; offset() is the position of the problem
/// (a byte offset for one-line formats, a line number for line formats).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset, const char* unit = "byte")
        : std::runtime_error(what + " (" + unit + " " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A search space or corpus exceeded its configured budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace emn

#endif
