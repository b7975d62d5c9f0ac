#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nbcolor {

enum class ErrorCode {
  MalformedInput,
  SelfLoop,
  InconsistentRotation,
  NotPlane,
  SizeLimit,
  IsolatedVertex,
  MissingEmbedding,
  XNotSubset,
  Timeout,
  BoundViolated,
  StructureError,
  UnknownGadget,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::InconsistentRotation: return "InconsistentRotation";
    case ErrorCode::NotPlane: return "NotPlane";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::MissingEmbedding: return "MissingEmbedding";
    case ErrorCode::XNotSubset: return "XNotSubset";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::StructureError: return "StructureError";
    case ErrorCode::UnknownGadget: return "UnknownGadget";
  }
  return "Unknown";
}

/// Single exception type of the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nbcolor
