#pragma once

#include <string>
#include <vector>

#include "mgan/conditions/conditions.hpp"

namespace mgan::generator {

enum class Variant { Full, NCGA, NoS, FB };

Variant parse_variant(const std::string& name);
std::string variant_name(Variant v);

struct GeneratorConfig {
  int n_blocks = 6;
  std::vector<int> channels{128, 128, 128, 64, 32, 16, 8};
  int entry_hw = 4;
  int image_size = 64;
  int blend_levels = 4;
  int spade_hidden = 16;
  bool masked_blend = true;

  // Blocks that double the resolution; the leading blocks keep the entry resolution.
  int upsampling_blocks() const;
  bool block_upsamples(int i) const { return i >= n_blocks - upsampling_blocks(); }
  void validate() const;
};

struct DiscriminatorConfig {
  std::vector<int> channels{8, 16, 32, 64};
  int input_channels = 6;  // image plus the (M, O) condition map
  int scales = 2;
};

// Everything needed to build the four networks of the generation path.
struct ModelConfig {
  double width = 1.0 / 8.0;
  GeneratorConfig generator;
  conditions::AppearanceConfig appearance;
  conditions::BackgroundConfig background;
  DiscriminatorConfig discriminator;
  Variant variant = Variant::Full;
};

// Full-scale channel counts scaled by `width` at the given output resolution.
ModelConfig make_model_config(double width = 1.0 / 8.0, int image_size = 64);
// NCGA swaps the appearance encoder, FB the blending; NoS only affects the objective.
ModelConfig ablation_variant(ModelConfig cfg, Variant v);

template <typename T>
class SpadeResBlock {
 public:
  SpadeResBlock() = default;
  SpadeResBlock(ParamSet<T>& ps, const std::string& name, int cin, int cout, int hidden, bool upsample, Rng& rng);
  // `cond` is the (M, O) map already resized to the block's output resolution.
  Var<T> operator()(const Var<T>& x, const Var<T>& cond) const;
  bool upsamples() const { return upsample_; }

 private:
  bool upsample_ = false, learned_skip_ = false;
  SpadeNorm<T> norm0_, norm1_, norm_s_;
  Conv2d<T> conv0_, conv1_, conv_s_;
};

template <typename T>
struct GeneratorInputs {
  Tensor<T> mask;           // target M, (N, 1, H, W)
  Tensor<T> cond;           // (M, O * M), (N, 3, H, W)
  Var<T> code;              // appearance code, (N, C0, 1, 1)
  std::vector<Var<T>> background;  // background encoder features, finest first
};

// Per-block activations recorded for inspection.
template <typename T>
struct GeneratorTrace {
  Tensor<T> entry;
  std::vector<Tensor<T>> generated;  // block outputs before blending
  std::vector<Tensor<T>> blended;    // block outputs after blending (same as generated for unblended blocks)
  std::vector<Tensor<T>> blend_masks;
};

template <typename T>
class Generator {
 public:
  Generator() = default;
  Generator(ParamSet<T>& ps, const GeneratorConfig& cfg, Rng& rng);
  // Image in [0, 1].
  Var<T> operator()(const GeneratorInputs<T>& in, GeneratorTrace<T>* trace = nullptr) const;
  const GeneratorConfig& config() const { return cfg_; }

 private:
  GeneratorConfig cfg_;
  std::vector<SpadeResBlock<T>> blocks_;
  Conv2d<T> out_;
};

template <typename T>
struct DiscriminatorOutput {
  std::vector<Var<T>> logits;    // one patch map per scale, full resolution first
  std::vector<Var<T>> features;  // scales x layers intermediate maps
};

template <typename T>
class Discriminator {
 public:
  Discriminator() = default;
  Discriminator(ParamSet<T>& ps, const DiscriminatorConfig& cfg, Rng& rng);
  DiscriminatorOutput<T> operator()(const Var<T>& image, const Var<T>& cond) const;
  // Logit-map extent of one tower for a square input of `size` pixels.
  int logit_extent(int size) const;

 private:
  DiscriminatorConfig cfg_;
  std::vector<std::vector<Conv2d<T>>> towers_;
  std::vector<Conv2d<T>> heads_;
};

// The four networks with their parameter sets. Parameter names follow
// generator.*, appearance.*, background.*, discriminator.*.
template <typename T>
struct HairModel {
  ModelConfig config;
  ParamSet<T> gen_params{"generator"}, app_params{"appearance"}, bg_params{"background"}, disc_params{"discriminator"};
  Generator<T> G;
  conditions::AppearanceEncoder<T> A;
  conditions::BackgroundEncoder<T> B;
  Discriminator<T> D;

  HairModel(const ModelConfig& cfg, std::uint64_t seed);
  HairModel(const HairModel&) = delete;
  HairModel& operator=(const HairModel&) = delete;

  // Full generation: reference (image, mask) for appearance, I_back for background.
  Var<T> generate(const Tensor<T>& mask, const Tensor<T>& cond, const Var<T>& ref_image, const Tensor<T>& ref_mask,
                  const Var<T>& background_image, GeneratorTrace<T>* trace = nullptr) const;
  std::vector<Var<T>> generator_side_params() const;
};

}  // namespace mgan::generator
