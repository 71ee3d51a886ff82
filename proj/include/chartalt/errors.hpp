#pragma once

#include <stdexcept>
#include <string>

namespace chartalt {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// No current figure in the host registry.
class NoFigureError : public Error {
public:
    explicit NoFigureError(const std::string& msg = "no current figure") : Error(msg) {}
};

// A statistic cannot be computed for the given series shape.
class InapplicableStatError : public Error {
public:
    explicit InapplicableStatError(const std::string& msg) : Error(msg) {}
};

// Least squares or correlation on constant input.
class DegenerateFitError : public Error {
public:
    explicit DegenerateFitError(const std::string& msg) : Error(msg) {}
};

class NoTabularDataError : public Error {
public:
    explicit NoTabularDataError(const std::string& msg) : Error(msg) {}
};

class MissingAugmentationError : public Error {
public:
    explicit MissingAugmentationError(const std::string& msg) : Error(msg) {}
};

// Transport errors carry the provider payload for diagnosis.
class ApiError : public Error {
public:
    ApiError(const std::string& msg, std::string payload)
        : Error(payload.empty() ? msg : msg + ": " + payload), payload_(std::move(payload)) {}
    const std::string& payload() const { return payload_; }

private:
    std::string payload_;
};

class AuthError : public ApiError {
public:
    explicit AuthError(std::string payload = {}) : ApiError("authentication failed", std::move(payload)) {}
};

class RateLimitError : public ApiError {
public:
    explicit RateLimitError(std::string payload = {}) : ApiError("rate limited", std::move(payload)) {}
};

class TimeoutError : public ApiError {
public:
    explicit TimeoutError(std::string payload = {}) : ApiError("request timed out", std::move(payload)) {}
};

class MalformedResponseError : public ApiError {
public:
    explicit MalformedResponseError(std::string payload = {})
        : ApiError("malformed provider response", std::move(payload)) {}
};

class WriteError : public Error {
public:
    explicit WriteError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class CellExecutionError : public Error {
public:
    explicit CellExecutionError(const std::string& msg) : Error(msg) {}
};

class EnvironmentError : public Error {
public:
    explicit EnvironmentError(const std::string& msg) : Error(msg) {}
};

class EmptyCorpusError : public Error {
public:
    explicit EmptyCorpusError(const std::string& msg = "empty corpus") : Error(msg) {}
};

class DuplicateRecordError : public Error {
public:
    explicit DuplicateRecordError(const std::string& msg) : Error(msg) {}
};

}  // namespace chartalt
