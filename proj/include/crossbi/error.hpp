#pragma once

#include <stdexcept>
#include <string>

namespace crossbi {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
  public:
    using Error::Error;
};

class FieldMismatch : public Error {
  public:
    using Error::Error;
};

class NotInvertible : public Error {
  public:
    using Error::Error;
};

class NotEquivalence : public Error {
  public:
    using Error::Error;
};

class InternalInconsistency : public Error {
  public:
    using Error::Error;
};

class UnsupportedBase : public Error {
  public:
    using Error::Error;
};

class BadCharacteristic : public Error {
  public:
    using Error::Error;
};

class AntipodeNotInvertible : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class UnknownName : public Error {
  public:
    using Error::Error;
};

} // namespace crossbi
