#pragma once

#include <stdexcept>
#include <string>

namespace lmm {

/// Base of every exception thrown by the library. `code()` is a short
/// machine-readable tag ("domain", "rank", "io", ...) used by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// LIP operation hit the pole at the upper bound M.
struct SingularityError : Error {
    explicit SingularityError(const std::string& what) : Error("singularity", what) {}
};

struct RankError : Error {
    explicit RankError(const std::string& what) : Error("rank", what) {}
};

struct GeometryError : Error {
    explicit GeometryError(const std::string& what) : Error("geometry", what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("io", what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("config", what) {}
};

}  // namespace lmm
