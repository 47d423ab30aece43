#pragma once

#include <stdexcept>
#include <string>

namespace prox {

/// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point id (or index) that does not belong to the space it was used with.
class ForeignPointError : public Error {
public:
    explicit ForeignPointError(const std::string& id)
        : Error("point '" + id + "' is not in the space"), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

class MissingCoordinatesError : public Error {
public:
    explicit MissingCoordinatesError(const std::string& id)
        : Error("point '" + id + "' has no coordinates"), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

/// Structural problem with a space, probe, map or other input value.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// Descriptive operation requested on data without a probe function, or a
/// mode that does not fit the data it is applied to.
class TypeMismatchError : public Error {
public:
    using Error::Error;
};

class MismatchedSpacesError : public Error {
public:
    using Error::Error;
};

/// Gluing precondition that did not hold.
class GluePreconditionError : public Error {
public:
    enum class Condition { NotClosed, NotCovering, Disagreement };

    GluePreconditionError(Condition c, const std::string& what) : Error(what), condition_(c) {}
    Condition condition() const noexcept { return condition_; }

private:
    Condition condition_;
};

class ResolutionError : public Error {
public:
    using Error::Error;
};

class MidpointMismatchError : public Error {
public:
    using Error::Error;
};

class OutOfWindowError : public Error {
public:
    using Error::Error;
};

class SelfIntersectionError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class EmptyCoverError : public Error {
public:
    using Error::Error;
};

class NonClosedComplexError : public Error {
public:
    using Error::Error;
};

class NonConvexElementError : public Error {
public:
    using Error::Error;
};

class DegenerateTriangleError : public Error {
public:
    using Error::Error;
};

class InvalidShapeError : public Error {
public:
    using Error::Error;
};

class UnsortedInputError : public Error {
public:
    using Error::Error;
};

/// Input document problem: names the file, the offending field and the reason.
class ParseError : public Error {
public:
    ParseError(std::string file, std::string field, std::string reason)
        : Error(file + ": " + field + ": " + reason),
          file_(std::move(file)),
          field_(std::move(field)),
          reason_(std::move(reason)) {}

    const std::string& file() const noexcept { return file_; }
    const std::string& field() const noexcept { return field_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string file_;
    std::string field_;
    std::string reason_;
};

}  // namespace prox
