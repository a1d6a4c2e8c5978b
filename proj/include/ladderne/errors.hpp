#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ladderne {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGame : public Error {
 public:
  using Error::Error;
};

class NonGenericParameters : public Error {
 public:
  using Error::Error;
};

class BadDegree : public Error {
 public:
  using Error::Error;
};

class TooSmall : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class UnsupportedParity : public Error {
 public:
  using Error::Error;
};

class InvalidChain : public Error {
 public:
  using Error::Error;
};

class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ladderne
