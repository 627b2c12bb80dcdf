#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mgan/numerics/autograd.hpp"

namespace mgan::orientation {

inline constexpr int kNumBins = 32;

struct GaborParams {
  int k = 17;
  double wavelength = 4.0;
  double sigma_along = 4.0;
  double sigma_across = 2.0;
};

// 32 even-symmetric oriented filters. Angles use image axes (x right, y down) and
// measure the strand direction from +x toward +y; bin i covers angle i*pi/32.
struct GaborBank {
  GaborParams params;
  TensorD kernels;  // (32, 1, k, k)

  int k() const { return params.k; }
  static double angle(int bin);
  const double* kernel(int bin) const { return kernels.ptr() + static_cast<std::size_t>(bin) * k() * k(); }
  template <typename T>
  Tensor<T> weight() const {
    return kernels.cast<T>();
  }
};

GaborBank build_gabor_bank(const GaborParams& params = {});

struct OrientationField {
  TensorF encoded;     // (N, 2, H, W) as [cos 2o, sin 2o]
  TensorF confidence;  // (N, 1, H, W)
  std::optional<TensorF> label;  // (N, 1, H, W) angles in [0, pi)

  int height() const { return encoded.height(); }
  int width() const { return encoded.width(); }
};

// Rec. 601 luma of an (N, 1 or 3, H, W) image; single-channel input is returned unchanged.
TensorF luminance(const TensorF& image);

// Raw filter responses (N, 32, H, W) with reflective borders.
TensorF gabor_responses(const TensorF& image, const GaborBank& bank);

// Hard argmax labels and max-magnitude confidence.
OrientationField estimate_orientation(const TensorF& image, const GaborBank& bank);

TensorF encode_orientation(const TensorF& angles);
TensorF decode_orientation(const TensorF& encoded);

// Confidence-weighted Gaussian smoothing, truncated at 3 sigma, reflective borders.
OrientationField smooth_orientation(const OrientationField& field, double sigma = 2.0);

// Estimation followed by smoothing: the condition-input path.
OrientationField dense_orientation(const TensorF& image, const GaborBank& bank, double sigma = 2.0);

// Differentiable soft orientation of an image: returns (N, 3, H, W) holding the
// softmax-weighted [cos 2o, sin 2o] in channels 0-1 and the soft confidence in channel 2.
template <typename T>
Var<T> soft_orientation(const Var<T>& image, const GaborBank& bank, double tau, double abs_eps = 1e-6);

// mean over pixels of sum over the two channels of |O' - O_target| * w' * M.
template <typename T>
Var<T> structural_loss(const Var<T>& image, const Tensor<T>& target, const Tensor<T>& mask, const GaborBank& bank,
                       double tau = 0.05);

// Held-out metric: mean over mask pixels of the L1 distance between the hard
// encoded orientation of `image` and `target`. Unweighted, so low-contrast
// outputs are not rewarded for having low confidence.
double hard_structural_metric(const TensorF& image, const TensorF& target, const TensorF& mask,
                              const GaborBank& bank);

// Hue from angle, value from confidence normalised by its maximum. Output (N, 3, H, W) in [0, 1].
TensorF visualize(const OrientationField& field);

void save_field(const OrientationField& field, const std::filesystem::path& path);
OrientationField load_field(const std::filesystem::path& path);
std::string field_to_bytes(const OrientationField& field);
OrientationField field_from_bytes(const std::string& bytes);

}  // namespace mgan::orientation
