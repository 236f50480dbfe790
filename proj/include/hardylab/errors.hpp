#pragma once

#include <stdexcept>
#include <string>

namespace hardylab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t offset) : Error(msg), offset(offset) {}
  std::size_t offset;
};
struct NotPolynomialGrowth : Error { using Error::Error; };
// Growth comparison could not be decided; first-class outcome, never coerced.
struct InconclusiveError : Error { using Error::Error; };
struct IrrationalityUndecided : Error { using Error::Error; };
struct NormalFormError : Error { using Error::Error; };
struct NoWindowFound : Error { using Error::Error; };
struct NotNice : Error { using Error::Error; };
struct NotEssentiallyDistinct : Error { using Error::Error; };
struct EmptyFamily : Error { using Error::Error; };
struct FormViolation : Error { using Error::Error; };
struct NonTermination : Error { using Error::Error; };
struct VerificationFailure : Error { using Error::Error; };
struct PrecisionExhausted : Error {
  PrecisionExhausted(const std::string& msg, long n) : Error(msg), n(n) {}
  long n;
};
struct ComplexityRefusal : Error { using Error::Error; };
struct UnsupportedSystem : Error { using Error::Error; };
struct NotErgodic : Error { using Error::Error; };

}  // namespace hardylab
