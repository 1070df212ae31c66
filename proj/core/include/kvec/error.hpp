#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kvec {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric argument is outside its documented domain (k = 0, k > n, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Unknown word id or surface.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Input bytes could not be decoded.
class IngestError : public Error {
 public:
  IngestError(const std::string& what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Reading or writing a file/stream failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace kvec
