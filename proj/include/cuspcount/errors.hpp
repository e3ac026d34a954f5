#pragma once

#include <stdexcept>
#include <string>

namespace cuspcount {

// Exit-code categories used by the CLI: Parse -> 2, Domain -> 3, Tie -> 4.
enum class ErrorCode { Parse = 2, Domain = 3, Tie = 4 };

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::Parse, w) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorCode::Domain, w) {}
};

struct UnsupportedDegree : DomainError {
  explicit UnsupportedDegree(const std::string& w) : DomainError(w) {}
};

struct NotCoprime : DomainError {
  explicit NotCoprime(const std::string& w) : DomainError(w) {}
};

struct SearchBudgetExceeded : DomainError {
  explicit SearchBudgetExceeded(const std::string& w) : DomainError(w) {}
};

struct NegativeCount : DomainError {
  explicit NegativeCount(const std::string& w) : DomainError(w) {}
};

struct NonIntegral : DomainError {
  explicit NonIntegral(const std::string& w) : DomainError(w) {}
};

struct NonIntegralData : DomainError {
  explicit NonIntegralData(const std::string& w) : DomainError(w) {}
};

struct RatioTooSmall : DomainError {
  explicit RatioTooSmall(const std::string& w) : DomainError(w) {}
};

struct TieInSpectrum : Error {
  explicit TieInSpectrum(const std::string& w) : Error(ErrorCode::Tie, w) {}
};

struct AmbiguousMaximizer : Error {
  explicit AmbiguousMaximizer(const std::string& w) : Error(ErrorCode::Tie, w) {}
};

struct AmbiguousMinimizer : Error {
  explicit AmbiguousMinimizer(const std::string& w) : Error(ErrorCode::Tie, w) {}
};

}  // namespace cuspcount
