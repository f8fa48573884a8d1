// errors.hpp -- error categories shared across the library.
//
// ResourceError: an input exceeded an explicit size/memory guard ("too big").
// ConsistencyError: two routes that must agree exactly disagreed ("wrong").
// The CLI maps these to distinct exit codes so scripts can tell them apart.

#pragma once

#include <stdexcept>
#include <string>

namespace ufmvt {

class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ufmvt
