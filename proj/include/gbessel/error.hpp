#pragma once

#include <stdexcept>
#include <string>

namespace gbessel {

// Every library failure derives from Error so callers can catch one type.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

// Evaluation requested at (or inside the guard band of) a pole or a zero
// that makes the requested quantity undefined.
class PoleError : public Error {
  public:
    using Error::Error;
};

class OverflowError : public Error {
  public:
    using Error::Error;
};

// An iterative method exhausted its budget or diverged.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

// A root search could not isolate a sign change.
class BracketingError : public Error {
  public:
    using Error::Error;
};

// Two algebraically equivalent formulas disagreed far beyond their error
// estimates. Always indicates an evaluation bug.
class InconsistencyError : public Error {
  public:
    using Error::Error;
};

}  // namespace gbessel
