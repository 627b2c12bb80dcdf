#pragma once

#include <functional>
#include <vector>

#include "mgan/numerics/layers.hpp"

namespace mgan::conditions {

class EmptyReferenceMask : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Full-scale channel list multiplied by `width`, at least one channel each.
std::vector<int> scale_channels(const std::vector<int>& base, double width);

// ---- mask morphology ----

// Binary masks use {0, 1}. Structuring element: disk of the given radius in pixels.
TensorF dilate(const TensorF& mask, double radius);
// Pixels outside the image count as set, so erosion does not eat inwards from the border.
TensorF erode(const TensorF& mask, double radius);
TensorF binarize(const TensorF& mask, float threshold = 0.5f);
double mask_area(const TensorF& mask);

struct FuzzyAugment {
  bool dilated = true;
  double radius = 0;
};
// Random dilation or erosion with radius uniform in [0, max_fraction * width].
TensorF fuzzy_mask_augment(const TensorF& mask, Rng& rng, double max_fraction = 0.03, FuzzyAugment* chosen = nullptr);

// Area-averaged resize for integer downscales, bilinear otherwise.
template <typename T>
Tensor<T> resize_mask(const Tensor<T>& mask, int height, int width);
template <typename T>
Var<T> resize_map(const Var<T>& map, int height, int width);

// ---- appearance ----

struct AppearanceConfig {
  std::vector<int> channels{8, 16, 32, 64, 128};
  // false selects dense convolutions and global average pooling.
  bool partial = true;
};

template <typename T>
class AppearanceEncoder {
 public:
  AppearanceEncoder() = default;
  AppearanceEncoder(ParamSet<T>& ps, const AppearanceConfig& cfg, Rng& rng);

  // (N, 3, H, W) references with (N, 1, H, W) masks -> (N, C, 1, 1) codes.
  Var<T> operator()(const Var<T>& image, const Tensor<T>& mask) const;
  int code_length() const { return cfg_.channels.back(); }
  const AppearanceConfig& config() const { return cfg_; }

 private:
  AppearanceConfig cfg_;
  std::vector<Conv2d<T>> convs_;
};

// The code duplicated over the target mask downsampled to (height, width); zero elsewhere.
template <typename T>
Var<T> broadcast_appearance(const Var<T>& code, const Tensor<T>& mask, int height, int width);

// ---- shape and structure ----

// Channels (M, O * M).
TensorF make_shape_structure_cond(const TensorF& mask, const TensorF& encoded);

// ---- background ----

struct BackgroundConfig {
  std::vector<int> channels{8, 16, 32, 64};
  std::vector<int> strides{1, 2, 2, 2};
};

template <typename T>
class BackgroundEncoder {
 public:
  BackgroundEncoder() = default;
  BackgroundEncoder(ParamSet<T>& ps, const BackgroundConfig& cfg, Rng& rng);

  // One feature map per layer, finest first.
  std::vector<Var<T>> operator()(const Var<T>& image) const;
  const BackgroundConfig& config() const { return cfg_; }

 private:
  BackgroundConfig cfg_;
  std::vector<Conv2d<T>> convs_;
};

// F_g * M + F_b * (1 - M), with M at feature resolution.
template <typename T>
Var<T> blend_features(const Var<T>& fg, const Var<T>& fb, const Tensor<T>& mask);
// Mask-free variant: (F_g + F_b) / 2.
template <typename T>
Var<T> average_features(const Var<T>& fg, const Var<T>& fb);

// Fills `hole` of `image` using pixels where `valid` is set; must pass through everything outside `hole`.
using BackgroundInpainter = std::function<TensorF(const TensorF& image, const TensorF& hole, const TensorF& valid)>;

struct BackgroundInput {
  TensorF image;    // I_back
  TensorF dilated;  // M'
  TensorF hole;     // M_in minus M_in and M
};

TensorF uniform_noise(const Shape& shape, Rng& rng, float lo = 0.0f, float hi = 1.0f);
double sample_dilate_radius(int width, Rng& rng);

// I_back = N * M' + inpaint(I * (1 - M_in), hole) * (1 - M') with M' = dilate(M, radius).
BackgroundInput compose_background_input(const TensorF& image, const TensorF& m_in, const TensorF& m,
                                         const TensorF& noise, double dilate_radius,
                                         const BackgroundInpainter& inpaint);

}  // namespace mgan::conditions
