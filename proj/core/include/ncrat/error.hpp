#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncrat {

/// Base of every error raised by the library. `name()` is the stable
/// identifier the CLI prints (e.g. "NotUnit").
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define NCRAT_DEFINE_ERROR(Type)                                               \
  class Type : public Error {                                                  \
  public:                                                                      \
    explicit Type(const std::string& what) : Error(#Type, what) {}             \
  }

NCRAT_DEFINE_ERROR(UnknownSymbol);
NCRAT_DEFINE_ERROR(SpecMismatch);
NCRAT_DEFINE_ERROR(DimensionMismatch);
NCRAT_DEFINE_ERROR(InvalidSpec);
NCRAT_DEFINE_ERROR(NotUnit);
NCRAT_DEFINE_ERROR(BoundExceeded);
NCRAT_DEFINE_ERROR(MultiVariable);
NCRAT_DEFINE_ERROR(NotSquare);
NCRAT_DEFINE_ERROR(NotSigmaInvertible);
NCRAT_DEFINE_ERROR(NotCommutative);
NCRAT_DEFINE_ERROR(FormatError);
NCRAT_DEFINE_ERROR(InvalidArgument);

#undef NCRAT_DEFINE_ERROR

/// Parse failure with the byte offset where it was detected.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("SyntaxError", what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace ncrat
