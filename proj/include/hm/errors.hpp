#pragma once

#include <stdexcept>
#include <string>

namespace hm {

/// Bad user-supplied data (unparseable literal, non-decomposable point, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A checked internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

/// ADL dispatcher usable inside classes that have their own is_zero member.
template <class K>
bool scalar_is_zero(const K& v) {
    return is_zero(v);
}

} // namespace hm
