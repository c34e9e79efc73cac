#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace entp::num {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& shape);
std::string shape_str(const Shape& shape);

template <typename T>
struct Node {
  Shape shape;
  std::vector<T> data;
  std::vector<T> grad;  // empty until backward touches the node
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node<T>>> parents;
  // Reads this node's grad and accumulates into the parents' grads.
  std::function<void(Node<T>&)> backward_fn;
  const char* op = "leaf";

  std::vector<T>& ensure_grad() {
    if (grad.size() != data.size()) grad.assign(data.size(), T(0));
    return grad;
  }
};

// Handle to a node of the computation graph. Copies share storage.
template <typename T>
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, T value, bool requires_grad = false);
  static Tensor from(Shape shape, std::vector<T> values, bool requires_grad = false);
  static Tensor scalar(T value, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const { return node_->shape; }
  std::size_t dim(std::size_t axis) const { return node_->shape.at(axis); }
  std::size_t rank() const { return node_->shape.size(); }
  std::size_t numel() const { return node_->data.size(); }
  bool requires_grad() const { return node_->requires_grad; }

  std::span<const T> data() const { return node_->data; }
  // Only for leaves (parameters, optimizer updates, test fixtures).
  std::span<T> mutable_data() { return node_->data; }
  bool has_grad() const { return node_->grad.size() == node_->data.size(); }
  std::span<const T> grad() const { return node_->grad; }
  std::span<T> mutable_grad() { return node_->ensure_grad(); }
  void zero_grad() { node_->grad.clear(); }

  T item() const;
  T at(std::size_t flat_index) const { return node_->data.at(flat_index); }

  // Copy of the values with no graph linkage.
  Tensor detach() const;

  Node<T>* node() const { return node_.get(); }
  const std::shared_ptr<Node<T>>& node_ptr() const { return node_; }

  static Tensor wrap(std::shared_ptr<Node<T>> node) {
    Tensor t;
    t.node_ = std::move(node);
    return t;
  }

 private:
  std::shared_ptr<Node<T>> node_;
};

// Graph recording is disabled while a guard is alive on this thread.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

bool grad_enabled();

// Reverse topological replay order of the graph reachable from `root`,
// root first. Every node appears exactly once.
template <typename T>
std::vector<Node<T>*> tape_order(const Tensor<T>& root);

// Populates grad on every requires_grad tensor reachable from the scalar `loss`.
template <typename T>
void backward(const Tensor<T>& loss);

}  // namespace entp::num
