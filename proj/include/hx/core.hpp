#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hx {

// Error taxonomy used across the library. The CLI maps these onto its
// exit codes (invalid config -> 2, data errors -> 3, numeric failures -> 4).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UndefinedMetric : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense 2D scalar field, row-major. A clean slice holds values in [0,1];
/// noisy diffusion states are unbounded.
template <typename T>
struct Image2D {
    int height = 0;
    int width = 0;
    std::vector<T> data;

    Image2D() = default;
    Image2D(int h, int w, T fill = T(0))
        : height(h), width(w), data(static_cast<size_t>(h) * static_cast<size_t>(w), fill) {
        if (h <= 0 || w <= 0)
            throw InvalidArgument("Image2D: dimensions must be positive");
    }

    size_t size() const { return data.size(); }

    T& at(int r, int c) { return data[static_cast<size_t>(r) * width + c]; }
    const T& at(int r, int c) const { return data[static_cast<size_t>(r) * width + c]; }

    bool same_shape(const Image2D& o) const { return height == o.height && width == o.width; }

    bool all_finite() const {
        for (T v : data)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }
};

template <typename T>
bool operator==(const Image2D<T>& a, const Image2D<T>& b) {
    return a.height == b.height && a.width == b.width && a.data == b.data;
}

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidArgument(msg);
}

} // namespace detail

} // namespace hx
