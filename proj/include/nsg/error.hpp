#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsg {

using Int = std::int64_t;

/// Domain error carrying a stable machine-readable name ("NotCofinite",
/// "KunzViolation", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

/// The complement of the given gap set is not closed under addition:
/// x and y are members but x + y is a gap.
class NotClosedError : public Error {
public:
  NotClosedError(Int x, Int y)
      : Error("NotClosed", "not closed under addition: " + std::to_string(x) + " + " +
                               std::to_string(y) + " = " + std::to_string(x + y) +
                               " is a gap"),
        x(x), y(y) {}

  Int x;
  Int y;
};

/// Coordinate at position `index` is not congruent to `index` mod m.
class BadResidueError : public Error {
public:
  BadResidueError(Int index, Int value, Int m)
      : Error("BadResidue", "coordinate " + std::to_string(index) + " is " +
                                std::to_string(value) + ", not congruent to " +
                                std::to_string(index) + " mod " + std::to_string(m)),
        index(index) {}

  Int index;
};

/// Coordinate at position `index` does not exceed the multiplicity.
class BelowMultiplicityError : public Error {
public:
  BelowMultiplicityError(Int index, Int value, Int m)
      : Error("BelowMultiplicity",
              "coordinate " + std::to_string(index) + " is " + std::to_string(value) +
                  ", which does not exceed the multiplicity " + std::to_string(m)),
        index(index) {}

  Int index;
};

/// Closure condition w(i) + w(j) >= w((i+j) mod m) fails at (i, j).
class KunzViolationError : public Error {
public:
  KunzViolationError(Int i, Int j, Int lhs, Int rhs)
      : Error("KunzViolation", "closure fails at (" + std::to_string(i) + ", " +
                                   std::to_string(j) + "): " + std::to_string(lhs) +
                                   " < " + std::to_string(rhs)),
        i(i), j(j) {}

  Int i;
  Int j;
};

namespace detail {

/// Always-on internal consistency check (independent of NDEBUG).
inline void check(bool condition, const char* message) {
  if (!condition) throw Error("InternalCheck", message);
}

}  // namespace detail

}  // namespace nsg
