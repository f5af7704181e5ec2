#pragma once

#include <stdexcept>
#include <string>

namespace gframes {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// --- input / parse errors ---

class MalformedLine : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

class DuplicateEdge : public Error {
public:
  using Error::Error;
};

class SelfLoopEdge : public Error {
public:
  using Error::Error;
};

class NonPositiveWeight : public Error {
public:
  using Error::Error;
};

class DuplicateAbscissa : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

// --- argument / dimension errors ---

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class GeneratorCountMismatch : public Error {
public:
  using Error::Error;
};

class EmptySystem : public Error {
public:
  using Error::Error;
};

class EmptyScaleSet : public Error {
public:
  using Error::Error;
};

class InvalidScale : public Error {
public:
  using Error::Error;
};

// --- numerical failures ---

class ConvergenceFailure : public Error {
public:
  using Error::Error;
};

class SingularFrameOperator : public Error {
public:
  using Error::Error;
};

} // namespace gframes
