#pragma once

#include <stdexcept>
#include <string>

namespace wordorder {

/// Everything that can go wrong, by name. Thrown wrapped in Error.
enum class ErrorKind {
  DuplicateElement,
  UnknownLetter,
  CycleDetected,
  LengthMismatch,
  CarrierMismatch,
  LetterCollision,
  AugmentationDistorts,
  NoLeast,
  NoGreatest,
  DegenerateBounds,
  AuxInWord,
  WrongAlphabet,
  SizeLimit,
  NotAPoset,
  ParseError,
  ValidationError,
  IoError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wordorder
