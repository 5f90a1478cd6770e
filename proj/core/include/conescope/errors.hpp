#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conescope {

// Base of every error raised by the library. Callers that only need a
// message can catch this; the CLI maps it to a usage failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownLetter : public Error {
 public:
  explicit UnknownLetter(const std::string& what) : Error("unknown letter: " + what) {}
};

class ModelMismatch : public Error {
 public:
  explicit ModelMismatch(const std::string& what) : Error("model mismatch: " + what) {}
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t estimate, std::uint64_t cap)
      : Error("enumeration cap exceeded: estimate " + std::to_string(estimate) +
              " > cap " + std::to_string(cap)),
        estimate_(estimate),
        cap_(cap) {}
  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t cap_;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

class AllZeroWeights : public Error {
 public:
  AllZeroWeights() : Error("hyperplane weights are all zero") {}
};

class WitnessNotFound : public Error {
 public:
  explicit WitnessNotFound(int horizon)
      : Error("no positive witness within search radius " + std::to_string(horizon)),
        horizon_(horizon) {}
  int horizon() const { return horizon_; }

 private:
  int horizon_;
};

class NoDeclaredCofinalCenter : public Error {
 public:
  NoDeclaredCofinalCenter() : Error("order declares no cofinal central generator") {}
};

class PathNotFound : public Error {
 public:
  using Error::Error;
};

class FactorNotConnectedAtScale : public Error {
 public:
  FactorNotConnectedAtScale(int width, int radius)
      : Error("factor cone is not " + std::to_string(width) + "-connected in the ball of radius " +
              std::to_string(radius)),
        width_(width),
        radius_(radius) {}
  int width() const { return width_; }
  int radius() const { return radius_; }

 private:
  int width_;
  int radius_;
};

class NotAccepted : public Error {
 public:
  explicit NotAccepted(const std::string& word) : Error("word not accepted: " + word) {}
};

class InvalidDescriptor : public Error {
 public:
  explicit InvalidDescriptor(const std::string& what) : Error("invalid descriptor: " + what) {}
};

}  // namespace conescope
