#ifndef BRAIDFORGE_ERRORS_HPP
#define BRAIDFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidforge {

// Exit-code / C-status mapping: ParseError -> 2, ValidationError -> 3,
// InternalError -> 4. Anything else escaping the API boundary is a bug.

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class NotDestabilizable : public ValidationError {
public:
  explicit NotDestabilizable(const std::string& msg) : ValidationError(msg) {}
};

class EmptyLink : public ValidationError {
public:
  explicit EmptyLink(const std::string& msg) : ValidationError(msg) {}
};

// Invariant breach inside the library: math that must hold failed to hold.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace braidforge

#endif
