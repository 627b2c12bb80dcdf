#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgan/inpaint/inpaint.hpp"
#include "mgan/numerics/optim.hpp"
#include "mgan/training/dataset.hpp"
#include "mgan/training/losses.hpp"

namespace mgan::training {

class NonFiniteLoss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrainConfig {
  double lambda_c = 1, lambda_s = 10, lambda_p = 1, lambda_a = 1, lambda_f = 1;
  double lr_g = 1e-4, lr_d = 4e-4;
  double beta1 = 0.5, beta2 = 0.999;
  int batch = 4;
  int iters = 2000;
  std::uint64_t seed = 1;
  double width_factor = 1.0 / 8.0;
  std::string variant = "full";
  int image_size = 64;
  int dataset_size = 512;
  int heldout = 100;
  int checkpoint_every = 500;  // 0 disables intermediate checkpoints
  double tau = 0.05;
  double fuzzy_fraction = 0.03;
  int bg_iters = 600;
  int orient_iters = 1000;
  int inpaint_batch = 4;
  double inpaint_lr = 5e-4;
  // Checkpoint whose inpainters are reused; their training phases are then skipped.
  std::string init_inpainters_from;

  LossWeights weights() const { return {lambda_c, lambda_s, lambda_p, lambda_a, lambda_f}; }
  generator::Variant parsed_variant() const { return generator::parse_variant(variant); }
  // NoS forces the structural weight to zero.
  LossWeights effective_weights() const;
  void validate() const;
};

void to_json(nlohmann::json& j, const TrainConfig& c);
// Unknown keys are rejected so that typos in config files do not go unnoticed.
void from_json(const nlohmann::json& j, TrainConfig& c);
TrainConfig load_config(const std::filesystem::path& path);

// Generator, encoders, discriminator and both inpainters, rebuilt from checkpoint metadata.
struct ModelBundle {
  std::unique_ptr<generator::HairModel<float>> model;
  inpaint::BackgroundInpainter background_inpainter;
  inpaint::OrientationInpainter orientation_inpainter;
  std::uint64_t seed = 0;

  ModelBundle(const generator::ModelConfig& cfg, std::uint64_t seed);
  Checkpoint to_checkpoint() const;
  static std::unique_ptr<ModelBundle> from_checkpoint(const Checkpoint& ck);
};

// Condition tensors of one batch, N stacked samples.
struct ConditionBatch {
  TensorF target;       // I, (N, 3, H, W)
  TensorF source_mask;  // M_in
  TensorF mask;         // M, possibly fuzzy
  TensorF orientation;  // O, (N, 2, H, W)
  TensorF cond;         // (M, O * M)
  TensorF ref_image, ref_mask;
  TensorF background;   // I_back
};

// Per-sample inputs precomputed once: the image, its hair mask and its dense orientation.
struct PreparedSample {
  TensorF image, mask, orientation, confidence;
  TensorF clean_background;
  orientation::OrientationField truth;
};
PreparedSample prepare_sample(const SynthSample& s, const orientation::GaborBank& bank);

TensorF stack_batch(const std::vector<const TensorF*>& parts);

// Assembles conditions for reconstructing `samples`: M is fuzzy-augmented when `fuzzy_fraction` > 0,
// the background input uses `bg` for the hole left by the shape change.
ConditionBatch build_conditions(const std::vector<const PreparedSample*>& samples,
                                const inpaint::BackgroundInpainter& bg, Rng& rng, double fuzzy_fraction);

// Fills the background hole with the trained inpainter, or with the image itself while untrained.
conditions::BackgroundInpainter background_fill(const inpaint::BackgroundInpainter& bg);

TensorF generate_image(const generator::HairModel<float>& model, const ConditionBatch& c);

struct MetricRow {
  long iter = 0;
  LossTerms terms;
  double g_total = 0;
};

std::string metric_header();
std::string format_metric_row(const MetricRow& r);
std::vector<MetricRow> read_metric_log(const std::filesystem::path& path);

// Held-out evaluation of a trained bundle.
struct EvalMetrics {
  double hard_structural = 0;  // mean over samples of hard_structural_metric
  double controllability_median_deg = 0;
  double reconstruction_mae = 0;  // mean |I' - I| inside M
};
// Indices dataset_size .. dataset_size + heldout - 1 of the training stream.
std::vector<PreparedSample> heldout_samples(const TrainConfig& cfg, const orientation::GaborBank& bank);

EvalMetrics evaluate(const ModelBundle& bundle, const std::vector<PreparedSample>& heldout,
                     const orientation::GaborBank& bank, std::uint64_t seed);

// Mean of the first `window` chromatic losses and of the last `window`.
struct ChromaticTrend {
  double early = 0, late = 0;
  double ratio() const { return early > 0 ? late / early : 0.0; }
};
ChromaticTrend chromatic_trend(const std::vector<MetricRow>& log, int window = 10);

class Trainer {
 public:
  explicit Trainer(const TrainConfig& cfg);

  const TrainConfig& config() const { return cfg_; }
  ModelBundle& bundle() { return *bundle_; }
  const ModelBundle& bundle() const { return *bundle_; }
  const std::vector<PreparedSample>& train_set() const { return train_; }
  const std::vector<PreparedSample>& heldout_set() const { return heldout_; }
  const orientation::GaborBank& bank() const { return bank_; }
  const std::vector<MetricRow>& log() const { return log_; }

  // Phase 1: L1 inside the hair region against the hair-free background.
  std::vector<double> train_background_inpainter(int iters);
  // Phase 3: confidence-weighted L1 inside the hole on stroke and completion pairs.
  std::vector<double> train_orientation_inpainter(int iters);

  // Next training batch drawn from the training stream.
  ConditionBatch next_batch();
  // Generator-side forward and backward without an optimizer step; gradients are left on the parameters.
  LossTerms generator_backward(const ConditionBatch& b);
  // One discriminator step followed by one generator step.
  MetricRow gan_step(const ConditionBatch& b);

  // Runs every phase, writing logs and checkpoints into `out_dir` when non-empty.
  void run(const std::filesystem::path& out_dir, std::ostream* progress = nullptr);

  // Called with the offending batch before NonFiniteLoss is thrown.
  std::function<void(const ConditionBatch&, const MetricRow&)> on_nonfinite;

 private:
  struct StepGraph;
  StepGraph forward_losses(const ConditionBatch& b);
  void check_finite(const ConditionBatch& b, const MetricRow& r);

  TrainConfig cfg_;
  orientation::GaborBank bank_;
  std::unique_ptr<ModelBundle> bundle_;
  PerceptualExtractor<float> extractor_;
  std::vector<PreparedSample> train_, heldout_;
  std::unique_ptr<Adam<float>> opt_g_, opt_d_;
  Rng batch_rng_, inpaint_rng_;
  std::vector<MetricRow> log_;
  long iter_ = 0;
};

}  // namespace mgan::training
