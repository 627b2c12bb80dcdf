#pragma once

#include <stdexcept>
#include <string>

#include "mgan/numerics/tensor.hpp"

namespace mgan::service {

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 8-bit PNG of a (1, 1 or 3, H, W) tensor in [0, 1]; values are clamped and rounded.
std::string encode_png(const TensorF& image);
// Any PNG libpng understands, converted to 8-bit RGB: (1, 3, H, W) in [0, 1].
TensorF decode_png_rgb(const std::string& bytes);
// Binary mask from a PNG: a pixel is set when its luminance (or alpha-weighted gray) is >= 0.5.
TensorF decode_png_mask(const std::string& bytes);

std::string base64_encode(const std::string& bytes);
// Throws DecodeError on characters outside the base64 alphabet.
std::string base64_decode(const std::string& text);

}  // namespace mgan::service
