#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patchveil/detector.hpp"
#include "patchveil/types.hpp"

namespace patchveil {

struct ToyDetectorOptions {
  int num_templates = 3;
  int window = 15;
  int stride = 8;
  // Template texture: a sparse set of +/-1 spikes over low Gaussian noise,
  // mean-centered and L2-normalized afterwards.
  float spike_density = 0.10f;
  float noise_sigma = 0.08f;
  // Sigmoid calibration targets: confidence of a unit-correlation plant and
  // of flat background.
  double planted_confidence = 0.9;
  double background_confidence = 0.05;
};

/// Differentiable sliding-window template detector.
///
/// Each window/template pair scores sigmoid(slope * correlation + offset);
/// every pair at or above the threshold is reported as one detection whose
/// box is the window extent. There is no non-maximum suppression, so the box
/// count is a crisp function of the confidences. All correlations are
/// accumulated in double precision, which keeps finite-difference checks of
/// the analytic gradient tight.
class ToyDetector : public DetectorAdapter {
 public:
  ToyDetector(std::string id, std::uint64_t template_seed,
              ToyDetectorOptions options = {});

  std::string id() const override { return id_; }
  std::string weight_hash() const override { return weight_hash_; }
  bool concurrency_safe() const override { return true; }
  std::string class_name(int) const override { return "object"; }

  std::vector<Detection> detect(const Image& image,
                                double threshold) const override;
  ImageGradient loss_gradient(const Image& image,
                              double threshold) const override;

  /// Raw template values, window*window*3 per template, unit L2 norm.
  const std::vector<std::vector<float>>& templates() const { return templates_; }
  int window() const { return options_.window; }
  int stride() const { return options_.stride; }
  double slope() const { return slope_; }
  double offset() const { return offset_; }
  std::uint64_t template_seed() const { return template_seed_; }

 private:
  struct WindowScore {
    int y0, x0;
    int template_index;
    double correlation;
    double confidence;
  };

  double correlate(const Image& image, int y0, int x0,
                   const std::vector<float>& tmpl) const;
  std::vector<WindowScore> score_windows(const Image& image,
                                         double threshold) const;

  std::string id_;
  std::uint64_t template_seed_;
  ToyDetectorOptions options_;
  std::vector<std::vector<float>> templates_;
  double slope_ = 0.0;
  double offset_ = 0.0;
  std::string weight_hash_;
};

}  // namespace patchveil
