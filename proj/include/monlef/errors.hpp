#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monlef {

/// Thrown when an operation's mathematical hypotheses are not met and no
/// boolean answer would be honest (e.g. a symmetry corollary applied to the
/// unit ideal).
class inapplicable_error : public std::domain_error {
public:
    explicit inapplicable_error(const std::string& what)
        : std::domain_error(what) {}
};

/// Thrown when a quotient exceeds the configured dimension cap.
class cap_exceeded_error : public std::runtime_error {
public:
    explicit cap_exceeded_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Syntax error with the byte offset of the offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace monlef
