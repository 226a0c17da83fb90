#pragma once

#include <stdexcept>
#include <string>

namespace padplace {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CollinearPoints : public Error {
 public:
  CollinearPoints() : Error("points are collinear") {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what) : Error(what) {}
};

/// UAV parameters admit no positive charging radius.
class InfeasibleParams : public Error {
 public:
  explicit InfeasibleParams(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

class BsNotRemovable : public Error {
 public:
  BsNotRemovable() : Error("the base station (index 0) cannot be removed") {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace padplace
