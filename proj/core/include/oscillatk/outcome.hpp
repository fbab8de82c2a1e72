// Copyright 2026 The oscillatk Authors
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

#ifndef OSCILLATK_OUTCOME_HPP
#define OSCILLATK_OUTCOME_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace oscillatk {

/// Thrown when an operation's precondition is violated (negative level,
/// t <= 0, malformed breakpoints, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by Outcome::value() when the outcome is not a finite number.
class NotANumberError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status { ok, divergent, tolerance_not_met };

const char* to_string(Status s) noexcept;

/// Result of a functional that can legitimately fail to be a number: an
/// integral that diverges, or a quadrature that ran out of budget.
class Outcome {
 public:
  static Outcome ok(double v) { return Outcome(Status::ok, v, {}); }
  static Outcome divergent(std::string what) {
    return Outcome(Status::divergent, 0.0, std::move(what));
  }
  /// `estimate` is the best value reached before the budget ran out.
  static Outcome tolerance_not_met(double estimate, std::string what) {
    return Outcome(Status::tolerance_not_met, estimate, std::move(what));
  }

  bool is_ok() const noexcept { return status_ == Status::ok; }
  bool is_divergent() const noexcept { return status_ == Status::divergent; }
  Status status() const noexcept { return status_; }
  const std::string& what() const noexcept { return what_; }

  double value() const {
    if (!is_ok()) {
      throw NotANumberError(what_ + ": " + to_string(status_));
    }
    return value_;
  }
  double value_or(double fallback) const noexcept { return is_ok() ? value_ : fallback; }
  double estimate() const noexcept { return value_; }

  /// Applies `fn` to the value of an ok outcome; passes failures through.
  template <class Fn>
  Outcome map(Fn&& fn) const {
    return is_ok() ? Outcome::ok(fn(value_)) : *this;
  }

 private:
  Outcome(Status s, double v, std::string what) : status_(s), value_(v), what_(std::move(what)) {}

  Status status_;
  double value_;
  std::string what_;
};

}  // namespace oscillatk

#endif  // OSCILLATK_OUTCOME_HPP
