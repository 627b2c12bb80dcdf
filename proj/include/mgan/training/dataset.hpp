#pragma once

#include <cstdint>
#include <vector>

#include "mgan/orientation/orientation.hpp"

namespace mgan::training {

struct SynthSample {
  TensorF image;       // (1, 3, S, S) in [0, 1]
  TensorF mask;        // (1, 1, S, S) binary hair mask
  orientation::OrientationField orientation;  // analytic flow direction on the mask
  TensorF background;  // the scene before hair was painted over it
  int background_kind = 0;
  std::uint64_t seed = 0;
};

enum BackgroundKind { kFlat = 0, kGradient = 1, kNoise = 2, kBlocks = 3 };

struct SynthOptions {
  int size = 64;
  double min_area = 0.10, max_area = 0.45;
  double stripe_period_min = 4.0, stripe_period_max = 4.5;
  double min_agreement = 0.90;  // hair texture is re-drawn until the estimator agrees this well
  int max_attempts = 16;
};

// Sample `index` of the stream identified by `seed`; independent of every other index.
SynthSample synth_sample(std::uint64_t seed, std::uint64_t index, const SynthOptions& opts = {});
std::vector<SynthSample> synth_dataset(int n, std::uint64_t seed, const SynthOptions& opts = {});

// Fraction of interior hair pixels whose estimated orientation lies within one bin of the stored one.
// Interior: the mask eroded by half the filter support.
double orientation_agreement(const SynthSample& s, const orientation::GaborBank& bank);

}  // namespace mgan::training
