#pragma once

#include <array>
#include <string>
#include <vector>

#include "mgan/numerics/checkpoint.hpp"
#include "mgan/numerics/layers.hpp"
#include "mgan/orientation/orientation.hpp"

namespace mgan::inpaint {

class UntrainedModel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Stroke {
  std::vector<std::array<double, 2>> points;  // (x, y) pixel coordinates
  double radius = 2.0;
};

// Throws std::invalid_argument unless the stroke has >= 2 points, distinct neighbours and a positive radius.
void validate_stroke(const Stroke& s);

struct StrokeRaster {
  TensorF mask;         // M_str, (1, 1, H, W)
  TensorF orientation;  // O_str, (1, 2, H, W), zero off-stroke
};

// Union of stroke disks; each covered pixel takes the direction (mod pi) of its nearest segment.
// Points are clipped to the image rectangle.
StrokeRaster rasterize_strokes(const std::vector<Stroke>& strokes, int height, int width);

struct OrientationInput {
  TensorF o_in;    // (1, 2, H, W)
  TensorF hole;    // M_hole
  TensorF stroke;  // M_str
};

double default_dilate_radius(const std::vector<Stroke>& strokes);

// O_in = O * (1 - M_hole) + O_str * M_str + N * (M_hole - M_str), M_hole = dilate(M_str, dilate_radius).
OrientationInput compose_orientation_input(const TensorF& base, const std::vector<Stroke>& strokes,
                                           double dilate_radius, const TensorF& noise);

struct UNetConfig {
  std::vector<int> channels{32, 64, 128, 256};
  int in_channels = 3;
  int out_channels = 2;
};

// Partial-convolution U-net: stride-2 encoder, nearest-upsampling decoder with skip connections.
template <typename T>
class PartialUNet {
 public:
  PartialUNet() = default;
  PartialUNet(ParamSet<T>& ps, const UNetConfig& cfg, Rng& rng);
  // `valid` is (N, 1, H, W); returns raw (N, out_channels, H, W) activations.
  Var<T> operator()(const Var<T>& x, const Tensor<T>& valid) const;
  const UNetConfig& config() const { return cfg_; }

 private:
  UNetConfig cfg_;
  std::vector<PartialConv2d<T>> enc_, dec_;
};

// Shared plumbing for the two inpainters: parameters, the trained flag and checkpoint I/O.
class InpainterBase {
 public:
  InpainterBase(const std::string& prefix, const UNetConfig& cfg, std::uint64_t seed);
  InpainterBase(const InpainterBase&) = delete;
  InpainterBase& operator=(const InpainterBase&) = delete;

  bool trained() const { return trained_; }
  void set_trained(bool on) { trained_ = on; }
  ParamSet<float>& params() { return params_; }
  const ParamSet<float>& params() const { return params_; }
  const PartialUNet<float>& net() const { return net_; }
  void save_to(Checkpoint& ck) const;
  // Missing entries leave the model untouched and untrained.
  bool load_from(const Checkpoint& ck);

 protected:
  void require_trained(const char* what) const;
  ParamSet<float> params_;
  PartialUNet<float> net_;
  bool trained_ = false;
};

class OrientationInpainter : public InpainterBase {
 public:
  explicit OrientationInpainter(std::uint64_t seed = 7);
  // Differentiable prediction: unit-normalised inside M_hole, O_in elsewhere.
  Var<float> forward(const Var<float>& o_in, const TensorF& hole, const TensorF& stroke) const;
  // O*: hard composite with O_in outside M_hole. Requires trained parameters unless M_hole is empty.
  TensorF run(const OrientationInput& in) const;
};

class BackgroundInpainter : public InpainterBase {
 public:
  explicit BackgroundInpainter(std::uint64_t seed = 11);
  Var<float> forward(const Var<float>& image, const TensorF& hole, const TensorF& valid) const;
  // Fills `hole` from pixels marked `valid` (default: outside the hole); exact passthrough outside the hole.
  TensorF run(const TensorF& image, const TensorF& hole, const TensorF* valid = nullptr) const;
};

// Training pair for the orientation inpainter.
struct StrokePair {
  OrientationInput input;
  TensorF target;      // O, (1, 2, H, W)
  TensorF confidence;  // w, (1, 1, H, W)
  TensorF hair;        // hair mask
  std::vector<Stroke> strokes;
};

// Strokes traced as streamlines of `field` inside `hair`, with hole coverage kept within
// [min_cover, max_cover] of the hair area.
StrokePair synth_stroke_pair(const orientation::OrientationField& field, const TensorF& hair, Rng& rng,
                             double min_cover = 0.02, double max_cover = 0.20);

// Pair whose hole is a region of the hair removed by shifting the mask, as in reference-mode completion.
StrokePair synth_completion_pair(const orientation::OrientationField& field, const TensorF& hair, Rng& rng);

// Reference mode: synthesises orientation on M_target minus M_src.
TensorF complete_reference_orientation(const TensorF& o_src, const TensorF& m_src, const TensorF& m_target,
                                       const OrientationInpainter& model, Rng& rng, TensorF* hole_out = nullptr);

}  // namespace mgan::inpaint
