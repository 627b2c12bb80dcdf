#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgan {

using Shape = std::vector<int>;

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t shape_numel(const Shape& shape) {
  std::size_t n = 1;
  for (int e : shape) {
    if (e < 0) throw ShapeError("negative extent");
    n *= static_cast<std::size_t>(e);
  }
  return n;
}

std::string shape_str(const Shape& shape);

// Dense row-major array. Rank-4 tensors follow the (batch, channel, height, width) layout.
template <typename T>
class Tensor {
 public:
  using value_type = T;

  Tensor() = default;
  explicit Tensor(Shape shape, T fill = T(0)) : shape_(std::move(shape)), data_(shape_numel(shape_), fill) {}
  Tensor(Shape shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != shape_numel(shape_)) {
      throw ShapeError("data length " + std::to_string(data_.size()) + " does not match shape " + shape_str(shape_));
    }
  }

  static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }

  const Shape& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_.at(static_cast<std::size_t>(i)); }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  // Rank-4 accessors.
  int batch() const { return dim(0); }
  int channels() const { return dim(1); }
  int height() const { return dim(2); }
  int width() const { return dim(3); }
  std::size_t plane() const { return static_cast<std::size_t>(dim(2)) * static_cast<std::size_t>(dim(3)); }

  T* ptr() { return data_.data(); }
  const T* ptr() const { return data_.data(); }
  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }
  std::vector<T>& vec() { return data_; }
  const std::vector<T>& vec() const { return data_; }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  std::size_t offset(int n, int c, int y, int x) const {
    return ((static_cast<std::size_t>(n) * shape_[1] + c) * shape_[2] + y) * shape_[3] + x;
  }
  T& at(int n, int c, int y, int x) { return data_[offset(n, c, y, x)]; }
  const T& at(int n, int c, int y, int x) const { return data_[offset(n, c, y, x)]; }

  T* channel_ptr(int n, int c) { return data_.data() + offset(n, c, 0, 0); }
  const T* channel_ptr(int n, int c) const { return data_.data() + offset(n, c, 0, 0); }

  void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  Tensor reshaped(Shape shape) const {
    if (shape_numel(shape) != data_.size()) throw ShapeError("reshape to " + shape_str(shape) + " from " + shape_str(shape_));
    return Tensor(std::move(shape), data_);
  }

  template <typename U>
  Tensor<U> cast() const {
    std::vector<U> out(data_.size());
    for (std::size_t i = 0; i < data_.size(); ++i) out[i] = static_cast<U>(data_[i]);
    return Tensor<U>(shape_, std::move(out));
  }

  T sum() const { return std::accumulate(data_.begin(), data_.end(), T(0)); }

  bool all_finite() const {
    for (const T& v : data_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.shape_ == b.shape_ && a.data_ == b.data_; }

 private:
  Shape shape_;
  std::vector<T> data_;
};

using TensorF = Tensor<float>;
using TensorD = Tensor<double>;

inline void require_rank4(const Shape& s, const char* what) {
  if (s.size() != 4) throw ShapeError(std::string(what) + ": expected rank-4 tensor, got " + shape_str(s));
}

}  // namespace mgan
