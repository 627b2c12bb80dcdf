#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "mgan/numerics/ops.hpp"

namespace mgan {

using Rng = std::mt19937_64;

template <typename T>
struct Parameter {
  std::string name;
  Var<T> var;
};

// Ordered, uniquely-named collection of trainable leaves for one network.
template <typename T>
class ParamSet {
 public:
  explicit ParamSet(std::string prefix = {}) : prefix_(std::move(prefix)) {}

  Var<T> create(const std::string& local_name, Tensor<T> init) {
    std::string full = prefix_.empty() ? local_name : prefix_ + "." + local_name;
    if (index_.count(full)) throw std::invalid_argument("duplicate parameter name: " + full);
    Var<T> v = Var<T>::leaf(std::move(init), true);
    index_.emplace(full, params_.size());
    params_.push_back({std::move(full), v});
    return v;
  }

  const std::vector<Parameter<T>>& params() const { return params_; }
  const std::string& prefix() const { return prefix_; }

  const Var<T>* find(const std::string& full_name) const {
    auto it = index_.find(full_name);
    return it == index_.end() ? nullptr : &params_[it->second].var;
  }

  void zero_grad() {
    for (auto& p : params_) p.var.zero_grad();
  }
  void set_trainable(bool on) {
    for (auto& p : params_) p.var.set_requires_grad(on);
  }
  std::size_t numel() const {
    std::size_t n = 0;
    for (const auto& p : params_) n += p.var.value().size();
    return n;
  }

 private:
  std::string prefix_;
  std::vector<Parameter<T>> params_;
  std::unordered_map<std::string, std::size_t> index_;
};

// He-uniform weights for a leaky-ReLU(0.2) network, zero biases.
template <typename T>
Tensor<T> init_conv_weight(int cout, int cin, int k, Rng& rng) {
  const double fan_in = static_cast<double>(cin) * k * k;
  const double bound = std::sqrt(6.0 / ((1.0 + 0.04) * fan_in));
  std::uniform_real_distribution<double> dist(-bound, bound);
  Tensor<T> w({cout, cin, k, k});
  for (auto& v : w.vec()) v = static_cast<T>(dist(rng));
  return w;
}

template <typename T>
struct Conv2d {
  Var<T> weight, bias;
  int stride = 1, pad = 0;

  Conv2d() = default;
  Conv2d(ParamSet<T>& ps, const std::string& name, int cin, int cout, int k, int stride_, int pad_, Rng& rng,
         bool with_bias = true)
      : stride(stride_), pad(pad_) {
    weight = ps.create(name + ".weight", init_conv_weight<T>(cout, cin, k, rng));
    if (with_bias) bias = ps.create(name + ".bias", Tensor<T>({cout}));
  }
  Var<T> operator()(const Var<T>& x) const { return ops::conv2d(x, weight, bias, stride, pad); }
  int out_channels() const { return weight.shape()[0]; }
};

template <typename T>
struct PartialConv2d {
  Var<T> weight, bias;
  int stride = 1, pad = 0;

  PartialConv2d() = default;
  PartialConv2d(ParamSet<T>& ps, const std::string& name, int cin, int cout, int k, int stride_, int pad_, Rng& rng)
      : stride(stride_), pad(pad_) {
    weight = ps.create(name + ".weight", init_conv_weight<T>(cout, cin, k, rng));
    bias = ps.create(name + ".bias", Tensor<T>({cout}));
  }
  ops::PartialConvResult<T> operator()(const Var<T>& x, const Tensor<T>& mask) const {
    return ops::partial_conv2d(x, mask, weight, bias, stride, pad);
  }
};

// out = gamma(cond) * instance_norm(x) + beta(cond), with a shared 3x3 trunk over cond.
template <typename T>
struct SpadeNorm {
  Conv2d<T> trunk, gamma, beta;

  SpadeNorm() = default;
  SpadeNorm(ParamSet<T>& ps, const std::string& name, int channels, int cond_channels, int hidden, Rng& rng)
      : trunk(ps, name + ".shared", cond_channels, hidden, 3, 1, 1, rng),
        gamma(ps, name + ".gamma", hidden, channels, 3, 1, 1, rng),
        beta(ps, name + ".beta", hidden, channels, 3, 1, 1, rng) {
    // Unit scale at initialisation.
    for (auto& v : gamma.bias.mutable_value().vec()) v = T(1);
  }

  // `cond` must already be at the feature resolution.
  Var<T> operator()(const Var<T>& x, const Var<T>& cond) const {
    const Shape& xs = x.shape();
    const Shape& cs = cond.shape();
    if (cs.size() != 4 || xs.size() != 4 || cs[2] != xs[2] || cs[3] != xs[3] || cs[0] != xs[0]) {
      throw ShapeError("spade_norm: condition " + shape_str(cs) + " does not match features " + shape_str(xs));
    }
    Var<T> h = ops::relu(trunk(cond));
    return ops::add(ops::mul(gamma(h), ops::instance_norm(x)), beta(h));
  }
};

}  // namespace mgan
