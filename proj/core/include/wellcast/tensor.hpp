#ifndef WELLCAST_TENSOR_HPP
#define WELLCAST_TENSOR_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace wellcast {

// Dense row-major double tensor. Rank is at most 3 in this engine
// ((T x C) sequences, (K x C x F) conv kernels, flat vectors).
class Tensor {
  public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
        data_.assign(numel_of(shape_), 0.0);
    }
    Tensor(std::vector<std::size_t> shape, std::vector<double> data)
        : shape_(std::move(shape)), data_(std::move(data)) {}

    static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t dim(std::size_t i) const { return shape_[i]; }
    std::size_t numel() const { return data_.size(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    // Rank-2 / rank-3 indexing; callers guarantee the rank.
    double& at(std::size_t i, std::size_t j) { return data_[i * shape_[1] + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * shape_[1] + j]; }
    double& at(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }
    double at(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }

    void fill(double v) { data_.assign(data_.size(), v); }
    bool all_finite() const;

    static std::size_t numel_of(const std::vector<std::size_t>& shape);
    static std::string shape_string(const std::vector<std::size_t>& shape);

  private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

}  // namespace wellcast

#endif  // WELLCAST_TENSOR_HPP
