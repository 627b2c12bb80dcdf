#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "mgan/numerics/tensor.hpp"

namespace mgan {

template <typename T>
struct Node {
  Tensor<T> value;
  Tensor<T> grad;
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> parents;
  // Reads this node's grad and accumulates into the parents that require it.
  std::function<void(Node&)> backward_fn;

  Tensor<T>& grad_buffer() {
    if (grad.size() != value.size()) grad = Tensor<T>(value.shape());
    return grad;
  }
  bool wants_grad() const { return requires_grad; }
};

// Handle to a node of the reverse-mode tape. Copies share the node.
template <typename T>
class Var {
 public:
  Var() = default;
  explicit Var(std::shared_ptr<Node<T>> node) : node_(std::move(node)) {}

  static Var leaf(Tensor<T> value, bool requires_grad) {
    auto node = std::make_shared<Node<T>>();
    node->value = std::move(value);
    node->requires_grad = requires_grad;
    return Var(std::move(node));
  }
  static Var constant(Tensor<T> value) { return leaf(std::move(value), false); }

  explicit operator bool() const { return node_ != nullptr; }

  const Tensor<T>& value() const { return node_->value; }
  // Direct access to a leaf's storage, used by optimizers and finite differences.
  Tensor<T>& mutable_value() { return node_->value; }
  const Shape& shape() const { return node_->value.shape(); }

  bool has_grad() const { return node_->grad.size() == node_->value.size() && !node_->value.empty(); }
  const Tensor<T>& grad() const { return node_->grad; }
  void zero_grad() { node_->grad = Tensor<T>(); }

  bool requires_grad() const { return node_ && node_->requires_grad; }
  void set_requires_grad(bool on) {
    if (node_->backward_fn) throw std::logic_error("set_requires_grad on a non-leaf node");
    node_->requires_grad = on;
  }

  Node<T>* node() const { return node_.get(); }
  const std::shared_ptr<Node<T>>& shared() const { return node_; }

 private:
  std::shared_ptr<Node<T>> node_;
};

using VarF = Var<float>;
using VarD = Var<double>;

// Graph recording switch, thread-local. Inference code disables it.
bool grad_enabled();
void set_grad_enabled(bool on);

class NoGradGuard {
 public:
  NoGradGuard() : prev_(grad_enabled()) { set_grad_enabled(false); }
  ~NoGradGuard() { set_grad_enabled(prev_); }
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool prev_;
};

// Creates an interior node. The result is a constant when no parent requires a gradient.
// Throws NumericError if the forward value contains NaN or Inf.
template <typename T>
Var<T> make_op(Tensor<T> value, std::vector<Var<T>> parents, std::function<void(Node<T>&)> backward_fn,
               const char* op_name);

template <typename T>
Var<T> detach(const Var<T>& v) {
  return Var<T>::constant(v.value());
}

// Reverse sweep from a scalar root. Gradients accumulate into leaves.
template <typename T>
void backward(const Var<T>& root);

}  // namespace mgan
