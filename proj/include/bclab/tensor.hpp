#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bclab::diffcore {

/// Dense row-major tensor of doubles. All numeric state in the lab is
/// 64-bit; shapes are explicit and checked at op boundaries.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::vector<std::size_t> s, std::vector<double> d)
      : shape(std::move(s)), data(std::move(d)) {
    if (data.size() != numel(shape)) {
      throw std::invalid_argument("Tensor: data size does not match shape");
    }
  }

  static std::size_t numel(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return n;
  }

  static Tensor zeros(std::vector<std::size_t> shape) {
    std::size_t n = numel(shape);
    return Tensor(std::move(shape), std::vector<double>(n, 0.0));
  }

  static Tensor scalar(double v) { return Tensor({1}, {v}); }

  static Tensor vector(std::vector<double> values) {
    std::size_t n = values.size();
    return Tensor({n}, std::move(values));
  }

  std::size_t size() const { return data.size(); }
  std::size_t rank() const { return shape.size(); }

  double scalar_value() const {
    if (data.size() != 1) {
      throw std::logic_error("Tensor: scalar_value on non-scalar");
    }
    return data[0];
  }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  bool all_finite() const;
};

std::string shape_to_string(const std::vector<std::size_t>& shape);

}  // namespace bclab::diffcore
