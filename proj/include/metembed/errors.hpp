#pragma once

#include <stdexcept>
#include <string>

namespace metembed {

/// Malformed input: bad addresses, weight sums outside {0,1}, wrong graph family.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A request exceeds a configured size limit (level cap, search space, LP size).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction produced a pair violating a proven bound. Always a bug.
class CounterexampleError : public std::runtime_error {
public:
    CounterexampleError(const std::string& what, int a, int b)
        : std::runtime_error(what), first(a), second(b) {}
    int first;
    int second;
};

/// Internal structure is broken (disconnected graph, infeasible LP built by us).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace metembed
