#pragma once

#include <stdexcept>
#include <string>

namespace fhl {

// All library failures derive from fhl::Error so the CLI can map them to a
// single exit path while tests can still catch the precise kind.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define FHL_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    const char* kind() const noexcept override { return #Name; }   \
  }

FHL_DEFINE_ERROR(UnknownVariable);
FHL_DEFINE_ERROR(SingularEvaluation);
FHL_DEFINE_ERROR(ResourceGuard);
FHL_DEFINE_ERROR(SampleExhaustion);
FHL_DEFINE_ERROR(DimensionMismatch);
FHL_DEFINE_ERROR(SingularSystem);
FHL_DEFINE_ERROR(ZeroElement);
FHL_DEFINE_ERROR(InvarianceViolation);
FHL_DEFINE_ERROR(IndexError);
FHL_DEFINE_ERROR(InvalidArgument);
FHL_DEFINE_ERROR(UnknownSuite);

#undef FHL_DEFINE_ERROR

// Parse failures carry a 1-based line/column into the offending text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  const char* kind() const noexcept override { return "ParseError"; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace fhl
