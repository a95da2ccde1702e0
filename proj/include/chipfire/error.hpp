#pragma once

#include <stdexcept>

namespace chipfire {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value left the checked 128-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A row or move cap was reached before the process terminated.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// An index outside the valid domain of an operation (e.g. a Pascal row below n).
class IndexError : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree did not, or a proven identity was violated.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class SegmentationError : public Error {
public:
    using Error::Error;
};

/// Cache file has a bad magic, unknown format version, or checksum mismatch.
class CorruptCacheError : public Error {
public:
    using Error::Error;
};

}  // namespace chipfire
