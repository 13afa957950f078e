// Copyright 2026-present the greedy-cs project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace greedycs {

/// Base class for all library errors. Subtypes map onto the CLI exit codes:
/// UsageError -> 1, NumericalError -> 2, InvariantViolation -> 3.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UsageError : public Error {
public:
  using Error::Error;
};

class NumericalError : public Error {
public:
  using Error::Error;
};

class InvariantViolation : public Error {
public:
  using Error::Error;
};

// ---- input / construction errors -----------------------------------------

class DimensionMismatch : public UsageError {
public:
  using UsageError::UsageError;
};

/// A column of the raw input matrix has (near-)zero Euclidean norm.
class ZeroColumn : public UsageError {
public:
  ZeroColumn(std::size_t column_1based, double norm)
      : UsageError("column " + std::to_string(column_1based) +
                   " has norm " + std::to_string(norm) +
                   " below the zero-column threshold"),
        column(column_1based) {}
  std::size_t column;
};

class NonFinite : public UsageError {
public:
  using UsageError::UsageError;
};

/// A file-loaded dictionary column deviates from unit norm by more than the
/// load tolerance; pass renormalize to accept it anyway.
class NormViolation : public UsageError {
public:
  NormViolation(std::size_t column_1based, double norm)
      : UsageError("column " + std::to_string(column_1based) + " has norm " +
                   std::to_string(norm) +
                   "; expected unit norm (use --renormalize to fix up file input)"),
        column(column_1based),
        norm(norm) {}
  std::size_t column;
  double norm;
};

class InvalidSparsity : public UsageError {
public:
  using UsageError::UsageError;
};

class OrderOutOfRange : public UsageError {
public:
  using UsageError::UsageError;
};

class ParseError : public UsageError {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : UsageError(what + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

class ConfigError : public UsageError {
public:
  using UsageError::UsageError;
};

class IoError : public UsageError {
public:
  using UsageError::UsageError;
};

class EmptyInput : public UsageError {
public:
  using UsageError::UsageError;
};

// ---- numerical errors ------------------------------------------------------

/// Subset enumeration would exceed the configured budget.
class BudgetExceeded : public NumericalError {
public:
  BudgetExceeded(const std::string& what, std::uint64_t estimated)
      : NumericalError(what + " (estimated enumeration count " +
                       std::to_string(estimated) + ")"),
        estimated_count(estimated) {}
  std::uint64_t estimated_count;
};

/// The selected subdictionary has smallest singular value at or below the
/// rank tolerance.
class RankDeficient : public NumericalError {
public:
  RankDeficient(std::vector<std::size_t> support_1based, double sigma_min)
      : NumericalError("subdictionary is rank deficient (sigma_min = " +
                       std::to_string(sigma_min) + ")"),
        support(std::move(support_1based)),
        sigma_min(sigma_min) {}
  std::vector<std::size_t> support;
  double sigma_min;
};

class EigenFailure : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// The orthogonality hypothesis of the correlation-bound lemma fails on a
/// support index that was declared inactive.
class HypothesisViolated : public NumericalError {
public:
  HypothesisViolated(std::size_t index_1based, double value)
      : NumericalError("orthogonality hypothesis violated at index " +
                       std::to_string(index_1based) + " (inner product " +
                       std::to_string(value) + ")"),
        index(index_1based),
        value(value) {}
  std::size_t index;
  double value;
};

class NotApplicable : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class DegenerateDelta : public NumericalError {
public:
  using NumericalError::NumericalError;
};

}  // namespace greedycs
