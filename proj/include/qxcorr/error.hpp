#pragma once

#include <stdexcept>
#include <string>

namespace qxcorr {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input that is entirely zero where a nonzero one is required.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Quantization mapped one of the signals to all zeros.
class DegenerateQuantization : public Error {
 public:
  using Error::Error;
};

// A Kronecker-unpacked coefficient left its provable range. Always a bug.
class InternalOverflow : public Error {
 public:
  using Error::Error;
};

class BadLength : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qxcorr
