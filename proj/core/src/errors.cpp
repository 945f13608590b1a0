#include "swlw/errors.hpp"

#include <sstream>

namespace swlw {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += "; ";
    out += items[i];
  }
  return out;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

ValidationError::ValidationError(std::string msg)
    : Error(msg), violations_{std::move(msg)} {}

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(join(violations)), violations_(std::move(violations)) {}

VacuumError::VacuumError(double location, double value)
    : NumericalError("vacuum: density " + fmt_double(value) + " below floor at x=" +
                     fmt_double(location)),
      location_(location) {}

PositivityError::PositivityError(std::string field, double location, double time,
                                 double value)
    : NumericalError("positivity lost in " + field + " at y=" + fmt_double(location) +
                     ", t=" + fmt_double(time) + " (value " + fmt_double(value) + ")"),
      field_(std::move(field)),
      location_(location),
      time_(time) {}

DivergenceError::DivergenceError(std::string field, double time)
    : NumericalError("non-finite values in " + field + " at t=" + fmt_double(time)),
      field_(std::move(field)) {}

IoError::IoError(std::string path, const std::string& what)
    : Error(path + ": " + what), path_(std::move(path)) {}

}  // namespace swlw
