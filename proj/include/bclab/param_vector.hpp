#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bclab/tensor.hpp"

namespace bclab::diffcore {

/// One named block of parameters (a layer's weight or bias).
struct Segment {
  std::string name;
  std::vector<std::size_t> shape;

  std::size_t size() const { return Tensor::numel(shape); }
};

/// Ordered segment list describing how a flat parameter vector maps onto
/// the model's named tensors.
class SegmentLayout {
 public:
  SegmentLayout() = default;
  explicit SegmentLayout(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t total_size() const { return total_; }
  std::size_t offset(std::size_t segment_index) const { return offsets_[segment_index]; }
  std::size_t segment_count() const { return segments_.size(); }

  /// Index of the segment owning flat coordinate i.
  std::size_t segment_of(std::size_t flat_index) const;

  bool operator==(const SegmentLayout& other) const;

 private:
  std::vector<Segment> segments_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

/// Flat view of all trainable parameters. The algebraic object for
/// perturbations delta = theta_star - theta, norms, and Hessian products.
class ParamVector {
 public:
  ParamVector() = default;
  ParamVector(SegmentLayout layout, std::vector<double> values);

  static ParamVector zeros(SegmentLayout layout);

  const SegmentLayout& layout() const { return layout_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  std::span<const double> segment_values(std::size_t segment_index) const;
  Tensor segment_tensor(std::size_t segment_index) const;

  bool same_layout(const ParamVector& other) const { return layout_ == other.layout_; }
  bool all_finite() const;

  /// Elementwise difference; layouts must match.
  ParamVector operator-(const ParamVector& other) const;
  ParamVector& operator+=(const ParamVector& other);
  ParamVector& add_scaled(const ParamVector& other, double scale);

  double l2_norm() const;
  double linf_norm() const;
  double dot(const ParamVector& other) const;

 private:
  SegmentLayout layout_;
  std::vector<double> values_;
};

/// Gradients share the exact layout of the parameters they differentiate.
using GradVector = ParamVector;

}  // namespace bclab::diffcore
