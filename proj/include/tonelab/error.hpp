#pragma once

#include <stdexcept>
#include <string>

namespace tonelab {

// Base of every error raised by the library. Outcomes that are part of an
// operation's normal result (a violation, an infeasible instance, a stuck
// greedy) are returned as values instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PartialColoring : public Error {
public:
    using Error::Error;
};

class PaletteMismatch : public Error {
public:
    using Error::Error;
};

class GroundSetMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NotAForest : public Error {
public:
    using Error::Error;
};

class OddDegreeSum : public Error {
public:
    using Error::Error;
};

}  // namespace tonelab
