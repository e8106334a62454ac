#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "patchveil/types.hpp"

namespace patchveil {

/// Raised when an adapter itself fails (process died, bad response, ...).
/// Never used for "no detections" -- that is a valid empty result.
class DetectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contract every attackable detector implements.
///
/// detect() must be deterministic for fixed input and weights, and the
/// gradient must have exactly the input image's shape. Adapters that are not
/// safe for concurrent inference return false from concurrency_safe(); the
/// batch runner serializes calls to those instances.
class DetectorAdapter {
 public:
  virtual ~DetectorAdapter() = default;

  virtual std::string id() const = 0;
  virtual std::string weight_hash() const = 0;
  virtual double operating_threshold() const { return 0.5; }
  virtual bool concurrency_safe() const { return false; }
  virtual std::string class_name(int class_id) const {
    return "class_" + std::to_string(class_id);
  }

  /// Every detection with confidence >= threshold.
  /// Throws std::invalid_argument for threshold outside [0,1] and
  /// DetectorError when the adapter fails.
  virtual std::vector<Detection> detect(const Image& image,
                                        double threshold) const = 0;

  /// Gradient of attack_loss over the above-threshold confidences with
  /// respect to every input value. Throws std::invalid_argument when there
  /// are no detections above threshold (the loss is undefined then).
  virtual ImageGradient loss_gradient(const Image& image,
                                      double threshold) const = 0;
};

/// Confidence-suppression loss: -(1/k) * sum(c_i^2). Always <= 0, and 0
/// exactly when every confidence is 0. Throws on an empty list or values
/// outside [0,1].
double attack_loss(const std::vector<double>& confidences);

/// Throws std::invalid_argument unless 0 <= threshold <= 1.
void validate_threshold(double threshold);

}  // namespace patchveil
