#pragma once

#include "mgan/numerics/tensor.hpp"

// Non-differentiable convolution kernels shared by the tape ops and by
// plain-tensor code paths (orientation estimation, inference helpers).
namespace mgan::kernels {

inline int conv_out_extent(int in, int k, int stride, int pad) { return (in + 2 * pad - k) / stride + 1; }

// y = W (*) x + b. `bias` may be null.
template <typename T>
Tensor<T> conv2d_forward(const Tensor<T>& x, const Tensor<T>& w, const Tensor<T>* bias, int stride, int pad);

// Accumulates dL/dx into `dx` (same shape as x).
template <typename T>
void conv2d_backward_input(const Tensor<T>& dy, const Tensor<T>& w, int stride, int pad, Tensor<T>& dx);

// Accumulates dL/dW into `dw`.
template <typename T>
void conv2d_backward_weight(const Tensor<T>& dy, const Tensor<T>& x, int stride, int pad, Tensor<T>& dw);

template <typename T>
void conv2d_backward_bias(const Tensor<T>& dy, Tensor<T>& db);

}  // namespace mgan::kernels
