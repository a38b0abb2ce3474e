#pragma once

#include <stdexcept>
#include <string>

namespace crowdsense {

enum class ErrorKind {
  MalformedRecord,
  UnknownLabelToken,
  NonMonotonicTimestamps,
  InsufficientClassSize,
  EmptyChannel,
  EmptySession,
  EmptyDataset,
  EmptyNode,
  EmptyInput,
  LengthMismatch,
  ClassOutOfRange,
  DimensionMismatch,
  NonFiniteInput,
  DivergedLoss,
  UnsupportedVersion,
  CorruptModel,
  DegenerateData,
  TooFewObservations,
  NonPositiveSlope,
  NoRiders,
  InvalidArgument,
  IoError,
};

constexpr const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedRecord: return "MalformedRecord";
    case ErrorKind::UnknownLabelToken: return "UnknownLabelToken";
    case ErrorKind::NonMonotonicTimestamps: return "NonMonotonicTimestamps";
    case ErrorKind::InsufficientClassSize: return "InsufficientClassSize";
    case ErrorKind::EmptyChannel: return "EmptyChannel";
    case ErrorKind::EmptySession: return "EmptySession";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::EmptyNode: return "EmptyNode";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ClassOutOfRange: return "ClassOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::DivergedLoss: return "DivergedLoss";
    case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorKind::CorruptModel: return "CorruptModel";
    case ErrorKind::DegenerateData: return "DegenerateData";
    case ErrorKind::TooFewObservations: return "TooFewObservations";
    case ErrorKind::NonPositiveSlope: return "NonPositiveSlope";
    case ErrorKind::NoRiders: return "NoRiders";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

/// Domain error with a machine-checkable kind. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace crowdsense
