#pragma once

#include <stdexcept>
#include <string>

namespace covforms {

// Base for every error raised by the engine. Callers that only need to
// distinguish "engine refused" from programmer errors catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidScalar : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

class PointAtInfinity : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

class ResourceGuard : public Error {
 public:
  using Error::Error;
};

}  // namespace covforms
