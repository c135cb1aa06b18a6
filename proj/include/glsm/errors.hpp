#pragma once

#include <stdexcept>
#include <string>

namespace glsm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WallCharacter : Error {
  using Error::Error;
};
struct UnsupportedChamber : Error {
  using Error::Error;
};
struct ZeroScalarPart : Error {
  using Error::Error;
};
struct UnknownSector : Error {
  using Error::Error;
};
struct PoleArgument : Error {
  using Error::Error;
};
struct VanishingTerm : Error {
  using Error::Error;
};
struct NotAdjacent : Error {
  using Error::Error;
};
struct ZeroHbar : Error {
  using Error::Error;
};
struct ZeroQ : Error {
  using Error::Error;
};
struct BranchAmbiguity : Error {
  using Error::Error;
};
struct OutOfRegion : Error {
  using Error::Error;
};
struct BadArgument : Error {
  using Error::Error;
};

} // namespace glsm
