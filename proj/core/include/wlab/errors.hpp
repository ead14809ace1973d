#pragma once

#include <stdexcept>
#include <string>

namespace wlab {

// Invalid mathematical input: non-homogeneous curve, degenerate system, ...
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configurable cap was hit: pair cap, m-adic cap, jet precision cap, ...
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity the theory guarantees failed to hold; indicates an engine bug.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace wlab
