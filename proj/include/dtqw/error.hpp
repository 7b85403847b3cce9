#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtqw {

/// Invalid parameter or dimension (rho outside [0,1], k < 3, mismatched k, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operator does not have the structure an algorithm relies on
/// (e.g. Fourier transform of a non block-circulant operator leaks off the diagonal blocks).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequence text rejected by the parser. `column()` is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::invalid_argument(what + " (at column " + std::to_string(column) + ")"), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Private key would not produce a maximally entangled public key.
class KeyError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Ciphertext did not decrypt to a single-position state.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dtqw
