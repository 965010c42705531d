#ifndef HEXAMOMENT_ERRORS_HPP
#define HEXAMOMENT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hexamoment {

// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadShapeError : public Error {
 public:
  using Error::Error;
};

class EntryOutOfRangeError : public Error {
 public:
  EntryOutOfRangeError(int value, int row, int col, const std::string& what)
      : Error(what), value(value), row(row), col(col) {}
  int value;
  int row;
  int col;
};

enum class Axis { Row, Column };

class NotDecreasingError : public Error {
 public:
  NotDecreasingError(Axis axis, int row, int col, const std::string& what)
      : Error(what), axis(axis), row(row), col(col) {}
  Axis axis;
  // Position of the offending comparison (1-indexed cell on its left/upper side).
  int row;
  int col;
};

class NotSquareError : public Error {
 public:
  using Error::Error;
};

class NotDivisibleError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  TooLargeError(std::int64_t limit, const std::string& count, const std::string& what)
      : Error(what), limit(limit), count(count) {}
  std::int64_t limit;
  std::string count;  // decimal string; may exceed any machine word
};

class NoTableauxError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace hexamoment

#endif  // HEXAMOMENT_ERRORS_HPP
