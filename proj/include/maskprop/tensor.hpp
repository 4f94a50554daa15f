#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace maskprop {

using Scalar = double;

/// Error for any domain-invariant or format violation caught at construction
/// or load time.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

/// Dense row-major tensor of doubles. Rank up to 4 is what the models use.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<int64_t> dims, Scalar fill = 0.0)
        : dims_(std::move(dims)) {
        int64_t n = 1;
        for (int64_t d : dims_) {
            check(d > 0, "Tensor: nonpositive dimension");
            n *= d;
        }
        data_.assign(static_cast<size_t>(n), fill);
    }

    static Tensor zeros(std::vector<int64_t> dims) { return Tensor(std::move(dims)); }
    static Tensor full(std::vector<int64_t> dims, Scalar v) { return Tensor(std::move(dims), v); }

    static Tensor scalar(Scalar v) {
        Tensor t({1});
        t.data_[0] = v;
        return t;
    }

    const std::vector<int64_t>& dims() const { return dims_; }
    int rank() const { return static_cast<int>(dims_.size()); }

    int64_t dim(int i) const {
        check(i >= 0 && i < rank(), "Tensor::dim out of range");
        return dims_[static_cast<size_t>(i)];
    }

    int64_t size() const { return static_cast<int64_t>(data_.size()); }

    Scalar* data() { return data_.data(); }
    const Scalar* data() const { return data_.data(); }

    Scalar& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    Scalar operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    Scalar& at(int64_t i, int64_t j) { return data_[static_cast<size_t>(i * dims_[1] + j)]; }
    Scalar at(int64_t i, int64_t j) const { return data_[static_cast<size_t>(i * dims_[1] + j)]; }

    Scalar& at(int64_t c, int64_t y, int64_t x) {
        return data_[static_cast<size_t>((c * dims_[1] + y) * dims_[2] + x)];
    }
    Scalar at(int64_t c, int64_t y, int64_t x) const {
        return data_[static_cast<size_t>((c * dims_[1] + y) * dims_[2] + x)];
    }

    Scalar& at(int64_t n, int64_t c, int64_t y, int64_t x) {
        return data_[static_cast<size_t>(((n * dims_[1] + c) * dims_[2] + y) * dims_[3] + x)];
    }
    Scalar at(int64_t n, int64_t c, int64_t y, int64_t x) const {
        return data_[static_cast<size_t>(((n * dims_[1] + c) * dims_[2] + y) * dims_[3] + x)];
    }

    bool same_shape(const Tensor& o) const { return dims_ == o.dims_; }

    bool all_finite() const {
        for (Scalar v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    Scalar abs_max() const {
        Scalar m = 0;
        for (Scalar v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    void fill(Scalar v) { std::fill(data_.begin(), data_.end(), v); }

    std::string shape_str() const {
        std::string s = "[";
        for (size_t i = 0; i < dims_.size(); ++i) {
            if (i) s += "x";
            s += std::to_string(dims_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int64_t> dims_;
    std::vector<Scalar> data_;
};

inline int64_t numel(const std::vector<int64_t>& dims) {
    int64_t n = 1;
    for (int64_t d : dims) n *= d;
    return n;
}

}  // namespace maskprop
