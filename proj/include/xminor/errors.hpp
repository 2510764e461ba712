#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xminor {

/// Unknown vertex/edge id, malformed argument, or violated operation precondition.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A theorem hypothesis required by an operation does not hold for the input.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exhaustive search ran out of its node budget. Distinct from a definite "none".
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at byte " + std::to_string(position) + ")"),
          position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Node counter shared by the exhaustive searches.
class Budget {
public:
    explicit Budget(std::size_t limit, const char* what = "search")
        : limit_(limit), what_(what)
    {
    }

    void tick(std::size_t n = 1)
    {
        used_ += n;
        if (used_ > limit_)
            throw BudgetExceeded(std::string(what_) + " budget of " + std::to_string(limit_) +
                                 " nodes exhausted");
    }

    std::size_t used() const noexcept { return used_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
    std::size_t used_ = 0;
    const char* what_;
};

} // namespace xminor
