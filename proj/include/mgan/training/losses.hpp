#pragma once

#include <filesystem>
#include <vector>

#include "mgan/generator/generator.hpp"
#include "mgan/numerics/checkpoint.hpp"

namespace mgan::training {

// sRGB in [0, 1] -> CIELAB (D65), channel-wise on (N, 3, H, W).
template <typename T>
Var<T> srgb_to_lab(const Var<T>& rgb);

// Mean absolute difference of the a and b channels.
template <typename T>
Var<T> chromatic_loss(const Var<T>& fake, const Var<T>& real);

struct ExtractorConfig {
  std::vector<int> channels{8, 16, 32, 64};  // one entry per stage, two 3x3 convs each
  std::uint64_t seed = 1234;
};

// Frozen convolutional feature pyramid standing in for a pretrained classifier.
template <typename T>
class PerceptualExtractor {
 public:
  explicit PerceptualExtractor(const ExtractorConfig& cfg = {});
  PerceptualExtractor(const PerceptualExtractor&) = delete;
  PerceptualExtractor& operator=(const PerceptualExtractor&) = delete;

  // Overrides the random weights with entries "perceptual.stage{s}.conv{j}.{weight,bias}".
  void load(const Checkpoint& ck);
  std::vector<Var<T>> operator()(const Var<T>& image) const;
  bool frozen() const;
  ParamSet<T>& params() { return params_; }

 private:
  ParamSet<T> params_{"perceptual"};
  std::vector<std::array<Conv2d<T>, 2>> stages_;
};

// Sum over stages of the mean absolute feature difference. Throws std::logic_error on a trainable extractor.
template <typename T>
Var<T> perceptual_loss(const Var<T>& fake, const Var<T>& real, const PerceptualExtractor<T>& extractor);

// Hinge terms averaged over discriminator scales.
template <typename T>
Var<T> hinge_discriminator_loss(const generator::DiscriminatorOutput<T>& real,
                                const generator::DiscriminatorOutput<T>& fake);
template <typename T>
Var<T> hinge_generator_loss(const generator::DiscriminatorOutput<T>& fake);
// Sum over layers of the mean absolute feature difference; real features are treated as constants.
template <typename T>
Var<T> feature_matching_loss(const generator::DiscriminatorOutput<T>& real,
                             const generator::DiscriminatorOutput<T>& fake);

struct LossWeights {
  double c = 1, s = 10, p = 1, a = 1, f = 1;
};

struct LossTerms {
  double c = 0, s = 0, p = 0, a_g = 0, a_d = 0, f = 0;
};

double generator_objective(const LossTerms& t, const LossWeights& w);
inline double discriminator_objective(const LossTerms& t) { return t.a_d; }

// Same weighting on graph values; a zero weight drops the term from the graph.
template <typename T>
Var<T> generator_objective(const Var<T>& c, const Var<T>& s, const Var<T>& p, const Var<T>& a_g, const Var<T>& f,
                           const LossWeights& w);

}  // namespace mgan::training
