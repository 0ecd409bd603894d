#pragma once

#include <stdexcept>
#include <string>

namespace nilform {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotSkew : Error {
  using Error::Error;
};

struct MalformedDocument : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// Raised when a winding computation cannot be rounded to an integer within
// tolerance, or the adaptive sampling cap is reached without agreement.
struct WindingUnstable : Error {
  int k = -1, i = -1, j = -1;
  explicit WindingUnstable(const std::string& msg) : Error(msg) {}
  WindingUnstable(const std::string& msg, int k_, int i_, int j_)
      : Error(msg), k(k_), i(i_), j(j_) {}
};

}  // namespace nilform
