#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eddeg {

// Base class for all toolkit errors. Subclasses map onto the distinct
// failure modes surfaced by the CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A Groebner run exceeded its configured degree or basis-size budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class UnitIdeal : public Error {
 public:
  using Error::Error;
};

class CodimensionOutOfRange : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class DegenerateChart : public Error {
 public:
  using Error::Error;
};

class NotInteger : public Error {
 public:
  using Error::Error;
};

class NotIsolated : public Error {
 public:
  using Error::Error;
};

class NotTopDegree : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

// Randomized trials disagreed. Carries every raw count so the caller can
// see what happened; -1 encodes an infinite count.
class NonGeneric : public Error {
 public:
  NonGeneric(const std::string& msg, std::vector<long long> raw_counts)
      : Error(msg), raw_counts_(std::move(raw_counts)) {}
  const std::vector<long long>& raw_counts() const { return raw_counts_; }

 private:
  std::vector<long long> raw_counts_;
};

}  // namespace eddeg
