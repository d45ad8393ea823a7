#pragma once

#include <stdexcept>
#include <string>

namespace polycover {

enum class ErrorKind {
  kInvalidInput,
  kGeometry,
  kNoPath,
  kIntractable,
};

// Single exception type for the library. The kind drives CLI exit codes, the
// stage names the pipeline step that failed (empty outside the planner).
class CoverageError : public std::runtime_error {
 public:
  CoverageError(ErrorKind kind, const std::string& message,
                std::string stage = {})
      : std::runtime_error(stage.empty() ? message
                                         : "[" + stage + "] " + message),
        kind_(kind),
        stage_(std::move(stage)),
        message_(message) {}

  ErrorKind kind() const { return kind_; }
  const std::string& stage() const { return stage_; }
  const std::string& message() const { return message_; }

  CoverageError withStage(const std::string& stage) const {
    return CoverageError(kind_, message_, stage);
  }

 private:
  ErrorKind kind_;
  std::string stage_;
  std::string message_;
};

}  // namespace polycover
