#pragma once

#include <vector>

#include "mgan/numerics/autograd.hpp"

namespace mgan {

struct AdamConfig {
  double lr = 1e-4;
  double beta1 = 0.5;
  double beta2 = 0.999;
  double eps = 1e-8;
};

template <typename T>
struct AdamMoments {
  Tensor<T> m, v;
};

// One bias-corrected Adam update of `param` at 1-based step `t`.
template <typename T>
void adam_step(Tensor<T>& param, const Tensor<T>& grad, AdamMoments<T>& state, const AdamConfig& cfg, long t);

template <typename T>
class Adam {
 public:
  Adam(std::vector<Var<T>> params, AdamConfig cfg);

  // Applies one update to every parameter holding a gradient, then clears gradients.
  void step();
  void zero_grad();
  long steps() const { return t_; }
  const AdamConfig& config() const { return cfg_; }

 private:
  std::vector<Var<T>> params_;
  std::vector<AdamMoments<T>> state_;
  AdamConfig cfg_;
  long t_ = 0;
};

}  // namespace mgan
