#include "patchveil/types.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace patchveil {

Image::Image(int h, int w, float fill, std::string image_id)
    : height(h), width(w), id(std::move(image_id)),
      pixels(static_cast<std::size_t>(h) * w * kChannels, fill) {}

void Image::validate() const {
  if (height < 1 || width < 1) {
    throw std::invalid_argument("image dimensions must be at least 1x1");
  }
  if (pixels.size() != static_cast<std::size_t>(height) * width * kChannels) {
    throw std::invalid_argument("image buffer size does not match dimensions");
  }
  for (float v : pixels) {
    if (!(v >= 0.0f && v <= 1.0f)) {
      throw std::invalid_argument("image values must lie in [0,1]");
    }
  }
}

float BoundingBox::area() const {
  return std::max(0.0f, x_max - x_min) * std::max(0.0f, y_max - y_min);
}

float BoundingBox::iou(const BoundingBox& other) const {
  const float ix0 = std::max(x_min, other.x_min);
  const float iy0 = std::max(y_min, other.y_min);
  const float ix1 = std::min(x_max, other.x_max);
  const float iy1 = std::min(y_max, other.y_max);
  const float inter = std::max(0.0f, ix1 - ix0) * std::max(0.0f, iy1 - iy0);
  const float uni = area() + other.area() - inter;
  return uni > 0.0f ? inter / uni : 0.0f;
}

PixelMask::PixelMask(int h, int w, bool value)
    : height_(h), width_(w),
      bits_(static_cast<std::size_t>(h) * w, value ? 1 : 0) {}

std::size_t PixelMask::count() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

int AttackConfig::resolved_max_patches() const {
  if (max_patches) return *max_patches;
  return region_limit ? 10 : 20;
}

void AttackConfig::validate() const {
  std::ostringstream err;
  if (max_iterations <= 0) err << "max_iterations must be positive";
  else if (add_frequency <= 0) err << "add_frequency must be positive";
  else if (decrease_threshold <= 0) err << "decrease_threshold must be positive";
  else if (!(step_size > 0.0f)) err << "step_size must be positive";
  else if (patch_size < 1) err << "patch_size must be at least 1";
  else if (cell_size < 1) err << "cell_size must be at least 1";
  else if (top_k_cells < 1) err << "top_k_cells must be at least 1";
  else if (!(p_limit > 0.0 && p_limit <= 1.0)) err << "p_limit must lie in (0,1]";
  else if (resolved_max_patches() < 1) err << "max_patches must be at least 1";
  else if (region_limit && *region_limit < 1) err << "region_limit must be at least 1";
  else if (grid_spacing < 2) err << "grid_spacing must be at least 2";
  else if (points_block < 1) err << "points_block must be at least 1";
  const std::string msg = err.str();
  if (!msg.empty()) throw std::invalid_argument(msg);
}

double perturbation_rate(const PixelMask& mask) {
  const std::size_t total =
      static_cast<std::size_t>(mask.height()) * mask.width();
  if (total == 0) return 0.0;
  return static_cast<double>(mask.count()) / static_cast<double>(total);
}

Image apply_mask(const Image& original, const Image& adversarial,
                 const PixelMask& mask) {
  if (!original.same_shape(adversarial) || original.height != mask.height() ||
      original.width != mask.width()) {
    throw std::invalid_argument("apply_mask: shape mismatch");
  }
  Image out = original;
  for (int y = 0; y < original.height; ++y) {
    for (int x = 0; x < original.width; ++x) {
      const bool attackable = mask.test(y, x);
      for (int c = 0; c < kChannels; ++c) {
        const float v = attackable ? adversarial.at(y, x, c) : original.at(y, x, c);
        out.at(y, x, c) = std::clamp(v, 0.0f, 1.0f);
      }
    }
  }
  return out;
}

}  // namespace patchveil
