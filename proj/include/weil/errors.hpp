#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weil {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class not_weil : public error {
 public:
  using error::error;
};

/// A homomorphism sends a relation monomial of its source to a nonzero element.
class relation_violated : public error {
 public:
  explicit relation_violated(std::string relation)
      : error("relation violated: " + relation + " does not map to 0"), relation_(std::move(relation)) {}
  const std::string& relation() const noexcept { return relation_; }

 private:
  std::string relation_;
};

class algebra_mismatch : public error {
 public:
  using error::error;
};

class dimension_mismatch : public error {
 public:
  using error::error;
};

class unknown_name : public error {
 public:
  using error::error;
};

class inexact_primitive : public error {
 public:
  using error::error;
};

class base_mismatch : public error {
 public:
  using error::error;
};

class index_out_of_range : public error {
 public:
  using error::error;
};

class condition_violated : public error {
 public:
  explicit condition_violated(std::string what, std::string witness = {})
      : error(witness.empty() ? what : what + " (witness: " + witness + ")"), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class parse_error : public error {
 public:
  parse_error(std::string message, std::size_t column)
      : error(message + " at column " + std::to_string(column + 1)), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace weil
