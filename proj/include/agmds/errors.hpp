/**************************************************************************
 * Copyright 2026 The agmds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace agmds {

/// Failure categories shared by every module. The CLI maps them onto exit codes.
enum class ErrorKind {
  NotPrime,
  NotPrimePower,
  Reducible,
  DegreeMismatch,
  TooLarge,
  DivisionByZero,
  CharNotTwo,
  Singular,
  BadModel,
  PointNotOnCurve,
  InfinityEvaluation,
  OutsideHasse,
  NotAdmissible,
  BudgetExhausted,
  BudgetExceeded,
  DegreeOutOfRange,
  DuplicatePoints,
  RankDeficient,
  NotHalfRate,
  NoFullWeightSolution,
  RangeViolation,
  PreconditionFailed,
  NotMDS,
  NoAdmissibleCurve,
  SubgroupNotFound,
  NoAdmissibleBeta,
  NoCurveFound,
  NotFound,
  ParseError,
  IOFailure,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CharNotTwo: return "CharNotTwo";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::BadModel: return "BadModel";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::InfinityEvaluation: return "InfinityEvaluation";
    case ErrorKind::OutsideHasse: return "OutsideHasse";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotHalfRate: return "NotHalfRate";
    case ErrorKind::NoFullWeightSolution: return "NoFullWeightSolution";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotMDS: return "NotMDS";
    case ErrorKind::NoAdmissibleCurve: return "NoAdmissibleCurve";
    case ErrorKind::SubgroupNotFound: return "SubgroupNotFound";
    case ErrorKind::NoAdmissibleBeta: return "NoAdmissibleBeta";
    case ErrorKind::NoCurveFound: return "NoCurveFound";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IOFailure: return "IOFailure";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Step budget applied to every exhaustive check unless the caller overrides it.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

}  // namespace agmds
