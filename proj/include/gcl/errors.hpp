#pragma once

#include <stdexcept>
#include <string>

namespace gcl {

// Broad failure classes; the command-line tool maps them to exit codes.
enum class ErrorClass { Validation, Unsupported, Invariant };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), cls_(cls), kind_(std::move(kind)) {}

    ErrorClass cls() const { return cls_; }
    const std::string& kind() const { return kind_; }

private:
    ErrorClass cls_;
    std::string kind_;
};

inline Error validation_error(const std::string& kind, const std::string& what) {
    return Error(ErrorClass::Validation, kind, what);
}

inline Error unsupported_error(const std::string& kind, const std::string& what) {
    return Error(ErrorClass::Unsupported, kind, what);
}

inline Error invariant_error(const std::string& kind, const std::string& what) {
    return Error(ErrorClass::Invariant, kind, what);
}

}  // namespace gcl
