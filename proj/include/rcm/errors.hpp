#pragma once

#include <stdexcept>
#include <string>

namespace rcm {

// Domain errors carry a stable code so the CLI can map them to exit status 1
// with a diagnostic naming the violated condition or format rule.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct MalformedInput : Error {
    explicit MalformedInput(const std::string& what) : Error("MalformedInput", what) {}
};

struct AssumptionViolation : Error {
    explicit AssumptionViolation(const std::string& what) : Error("AssumptionViolation", what) {}
};

struct BadGraph6 : Error {
    explicit BadGraph6(const std::string& what) : Error("BadGraph6", what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error("BudgetExceeded", what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

struct NotOnBoundary : Error {
    explicit NotOnBoundary(const std::string& what) : Error("NotOnBoundary", what) {}
};

struct NotMBalanced : Error {
    explicit NotMBalanced(const std::string& what) : Error("NotMBalanced", what) {}
};

struct NotNormalRegime : Error {
    explicit NotNormalRegime(const std::string& what) : Error("NotNormalRegime", what) {}
};

struct SourceEmpty : Error {
    explicit SourceEmpty(const std::string& what) : Error("SourceEmpty", what) {}
};

}  // namespace rcm
