#ifndef TWEETSENSE_ERRORS_HPP_
#define TWEETSENSE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tweetsense {

// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable files.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed persisted data (bad version line, truncated file, bad field).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Invalid runtime configuration (absent reference word, bad flag value).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Training cannot produce a usable model (e.g. a class with no examples).
class TrainError : public Error {
 public:
  using Error::Error;
};

}  // namespace tweetsense

#endif  // TWEETSENSE_ERRORS_HPP_
