#pragma once

#include <stdexcept>
#include <string>

namespace zforce {

// Precondition violations on caller input (bad ids, bad parameters, bad config).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// File could not be opened, read, written, or parsed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result failed its own post-condition check (e.g. an emitted set is not forcing).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zforce
