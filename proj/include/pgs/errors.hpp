#pragma once

#include <stdexcept>
#include <string>

namespace pgs {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class BaseMismatch : public Error {
 public:
  using Error::Error;
};

class HemisphereViolation : public Error {
 public:
  using Error::Error;
};

class NegativeScale : public Error {
 public:
  using Error::Error;
};

class DegenerateProx : public Error {
 public:
  using Error::Error;
};

class LineSearchExhausted : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class TooFewCorrespondences : public Error {
 public:
  using Error::Error;
};

class DegenerateLine : public Error {
 public:
  using Error::Error;
};

class RankDeficiencyViolation : public Error {
 public:
  using Error::Error;
};

class TooFewCameras : public Error {
 public:
  using Error::Error;
};

class DegenerateCloud : public Error {
 public:
  using Error::Error;
};

class RectificationDegenerate : public Error {
 public:
  using Error::Error;
};

class NegativeEigenvalues : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pgs
