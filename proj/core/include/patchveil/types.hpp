#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace patchveil {

inline constexpr int kChannels = 3;

/// RGB image, float intensities in [0,1], row-major HWC layout.
struct Image {
  int height = 0;
  int width = 0;
  std::string id;
  std::vector<float> pixels;

  Image() = default;
  Image(int h, int w, float fill = 0.0f, std::string image_id = {});

  float& at(int y, int x, int c) {
    return pixels[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
  }
  float at(int y, int x, int c) const {
    return pixels[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
  }

  bool same_shape(const Image& other) const {
    return height == other.height && width == other.width;
  }

  /// Throws std::invalid_argument if dimensions or value range are invalid.
  void validate() const;
};

/// Axis-aligned box in pixel coordinates, min-inclusive / max-exclusive.
struct BoundingBox {
  float x_min = 0, y_min = 0, x_max = 0, y_max = 0;

  float area() const;
  float iou(const BoundingBox& other) const;
};

/// A single detection from one detector.
struct Detection {
  BoundingBox box;
  float confidence = 0.0f;
  int class_id = 0;
  std::string detector_id;
};

/// Integer pixel rectangle, half-open: rows [y0,y1), cols [x0,x1).
struct PixelRect {
  int y0 = 0, x0 = 0, y1 = 0, x1 = 0;

  int height() const { return y1 - y0; }
  int width() const { return x1 - x0; }
  bool empty() const { return y1 <= y0 || x1 <= x0; }
  bool operator==(const PixelRect&) const = default;
};

/// Boolean per-pixel mask; a set bit marks all three channels attackable.
class PixelMask {
 public:
  PixelMask() = default;
  PixelMask(int h, int w, bool value = false);

  int height() const { return height_; }
  int width() const { return width_; }

  bool test(int y, int x) const {
    return bits_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int y, int x, bool value = true) {
    bits_[static_cast<std::size_t>(y) * width_ + x] = value ? 1 : 0;
  }

  std::size_t count() const;
  bool same_shape(const PixelMask& other) const {
    return height_ == other.height_ && width_ == other.width_;
  }
  bool operator==(const PixelMask&) const = default;

  const std::vector<std::uint8_t>& raw() const { return bits_; }

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Per-pixel accumulated channel-summed absolute gradient magnitudes.
struct GradientHeatmap {
  int height = 0;
  int width = 0;
  std::vector<float> values;

  GradientHeatmap() = default;
  GradientHeatmap(int h, int w)
      : height(h), width(w), values(static_cast<std::size_t>(h) * w, 0.0f) {}

  float& at(int y, int x) { return values[static_cast<std::size_t>(y) * width + x]; }
  float at(int y, int x) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

/// Gradient of a scalar loss with respect to every image value (HWC).
struct ImageGradient {
  int height = 0;
  int width = 0;
  std::vector<float> values;

  ImageGradient() = default;
  ImageGradient(int h, int w)
      : height(h), width(w),
        values(static_cast<std::size_t>(h) * w * kChannels, 0.0f) {}

  float& at(int y, int x, int c) {
    return values[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
  }
  float at(int y, int x, int c) const {
    return values[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
  }
};

/// All tunables of the attack loop. Defaults follow the reference protocol.
struct AttackConfig {
  int max_iterations = 2000;
  int add_frequency = 100;      // detection-bearing iterations between patch adds
  int decrease_threshold = 25;  // minimum-count hits before pruning latches on
  float step_size = 8.0f / 255.0f;
  int patch_size = 70;
  int cell_size = 70;
  int top_k_cells = 5;
  std::optional<int> max_patches;  // resolved: 10 with region_limit, else 20
  double p_limit = 0.02;
  std::optional<int> region_limit;
  int grid_spacing = 5;
  int points_block = 3;      // points-removal block side
  bool points_exact = false; // per-pixel points-removal, iterated to a fixpoint
  std::uint64_t seed = 0;

  int resolved_max_patches() const;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

/// Mutable attack state for one image, owned by a single engine run.
struct PerturbationState {
  Image adversarial;
  PixelMask mask;
  int patch_count = 0;
  int iteration = 0;
  int min_box_count = std::numeric_limits<int>::max();
  int add_counter = 0;
  int decrease_counter = 0;
  bool decrease_enabled = false;
};

/// Fraction of set bits, in [0,1].
double perturbation_rate(const PixelMask& mask);

/// Composite image: adversarial where mask is set, original elsewhere.
/// Output values are clipped to [0,1]. Throws on shape mismatch.
Image apply_mask(const Image& original, const Image& adversarial,
                 const PixelMask& mask);

}  // namespace patchveil
