#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace swlw {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid inputs: configuration, parameters, test functions.
class ValidationError : public Error {
public:
  explicit ValidationError(std::string msg);
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

private:
  std::vector<std::string> violations_;
};

class DomainError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class ShapeError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class RangeError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class UnsupportedError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Numerical failures during a computation.
class NumericalError : public Error {
public:
  using Error::Error;
};

class VacuumError : public NumericalError {
public:
  VacuumError(double location, double value);
  double location() const { return location_; }

private:
  double location_;
};

class PositivityError : public NumericalError {
public:
  PositivityError(std::string field, double location, double time, double value);
  const std::string& field() const { return field_; }
  double location() const { return location_; }
  double time() const { return time_; }

private:
  std::string field_;
  double location_;
  double time_;
};

class DivergenceError : public NumericalError {
public:
  DivergenceError(std::string field, double time);
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

class AccuracyError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class StepSizeError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class IoError : public Error {
public:
  IoError(std::string path, const std::string& what);
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

}  // namespace swlw
