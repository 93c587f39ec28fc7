#ifndef HOMSHIFT_ERRORS_HPP
#define HOMSHIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homshift {

/// Malformed textual input (edge lists, pattern files). Carries a line
/// number when one is known.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Violated precondition or out-of-domain argument.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An explicit budget (vertex count, search nodes, subset pairs, depth)
/// was exhausted. Never a silent truncation.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace homshift

#endif
