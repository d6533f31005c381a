#ifndef RAZZABONI_ERRORS_HPP
#define RAZZABONI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace razzaboni {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateFrame : Error {
  explicit DegenerateFrame(const std::string& msg) : Error(msg) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

struct DivisionByZeroConstant : Error {
  explicit DivisionByZeroConstant(const std::string& msg) : Error(msg) {}
};

struct NonpositiveTau : Error {
  explicit NonpositiveTau(const std::string& msg) : Error(msg) {}
};

struct NonpositiveLambda : Error {
  explicit NonpositiveLambda(const std::string& msg) : Error(msg) {}
};

struct SingularElimination : Error {
  explicit SingularElimination(const std::string& msg) : Error(msg) {}
};

struct StepTooLarge : Error {
  explicit StepTooLarge(const std::string& msg) : Error(msg) {}
};

struct SingularTheta : Error {
  explicit SingularTheta(const std::string& msg) : Error(msg) {}
};

struct ResidualTooLarge : Error {
  explicit ResidualTooLarge(const std::string& msg) : Error(msg) {}
};

struct DegenerateTangentPlane : Error {
  explicit DegenerateTangentPlane(const std::string& msg) : Error(msg) {}
};

struct KappaNearZero : Error {
  explicit KappaNearZero(const std::string& msg) : Error(msg) {}
};

struct CausalObstruction : Error {
  explicit CausalObstruction(const std::string& msg) : Error(msg) {}
};

struct NonpositiveReparam : Error {
  explicit NonpositiveReparam(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace razzaboni

#endif
