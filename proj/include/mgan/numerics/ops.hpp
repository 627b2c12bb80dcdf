#pragma once

#include <vector>

#include "mgan/numerics/autograd.hpp"

// Differentiable layer set. All image-like inputs are rank-4 (N, C, H, W).
namespace mgan::ops {

// Cross-correlation with zero padding. `bias` may be an empty Var.
template <typename T>
Var<T> conv2d(const Var<T>& input, const Var<T>& weight, const Var<T>& bias, int stride, int pad);

template <typename T>
struct PartialConvResult {
  Var<T> output;
  Tensor<T> mask;  // updated validity mask, (N, 1, H', W')
};

// Convolution over masked-in pixels only. Each window is rescaled by
// (in-image window pixels) / (masked-in window pixels); windows without any
// valid pixel produce 0 and an invalid updated mask.
template <typename T>
PartialConvResult<T> partial_conv2d(const Var<T>& input, const Tensor<T>& mask, const Var<T>& weight,
                                    const Var<T>& bias, int stride, int pad);

template <typename T>
Var<T> instance_norm(const Var<T>& input, double eps = 1e-5);

template <typename T>
Var<T> upsample2x_nearest(const Var<T>& input);

// Half-pixel-centre bilinear resampling to (height, width).
template <typename T>
Var<T> bilinear_resize(const Var<T>& input, int height, int width);

// Non-overlapping k x k average pooling.
template <typename T>
Var<T> avg_pool2d(const Var<T>& input, int k);

// Mirror padding without edge repetition.
template <typename T>
Var<T> pad_reflect(const Var<T>& input, int pad);

template <typename T>
Var<T> leaky_relu(const Var<T>& input, double slope = 0.2);
template <typename T>
Var<T> relu(const Var<T>& input);
template <typename T>
Var<T> tanh(const Var<T>& input);
template <typename T>
Var<T> abs(const Var<T>& input);
// sqrt(x^2 + eps^2), differentiable at zero.
template <typename T>
Var<T> smooth_abs(const Var<T>& input, double eps);

// Elementwise binary ops with broadcasting over extents equal to 1 (equal ranks).
template <typename T>
Var<T> add(const Var<T>& a, const Var<T>& b);
template <typename T>
Var<T> sub(const Var<T>& a, const Var<T>& b);
template <typename T>
Var<T> mul(const Var<T>& a, const Var<T>& b);

template <typename T>
Var<T> scale(const Var<T>& a, double s);
template <typename T>
Var<T> add_scalar(const Var<T>& a, double s);

template <typename T>
Var<T> concat_channels(const std::vector<Var<T>>& parts);
template <typename T>
Var<T> slice_channels(const Var<T>& input, int begin, int end);

// Scalar reductions, shape {1}.
template <typename T>
Var<T> sum(const Var<T>& input);
template <typename T>
Var<T> mean(const Var<T>& input);

// Per (instance, channel) average over pixels where mask > 0 weighted by mask; output (N, C, 1, 1).
// Throws std::domain_error when an instance has zero mask mass.
template <typename T>
Var<T> masked_average_pool(const Var<T>& input, const Tensor<T>& mask);

// Weighted sum of scalars: sum_i w_i * s_i.
template <typename T>
Var<T> weighted_sum(const std::vector<Var<T>>& scalars, const std::vector<double>& weights);

}  // namespace mgan::ops
