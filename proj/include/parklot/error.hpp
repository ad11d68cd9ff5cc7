#pragma once

#include <stdexcept>
#include <string>

namespace parklot {

// Malformed input: out-of-range entries, bad syntax, wrong lengths.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that falls outside an operation's domain,
// e.g. asking for the displacement of a preference that is not a parking function.
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Enumeration refused because the projected object count exceeds the cap.
class cap_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace parklot
