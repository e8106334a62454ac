#include "patchveil/detector.hpp"

#include <stdexcept>

namespace patchveil {

double attack_loss(const std::vector<double>& confidences) {
  if (confidences.empty()) {
    throw std::invalid_argument(
        "attack_loss: undefined for an empty confidence list; "
        "check the detection count first");
  }
  double sum = 0.0;
  for (double c : confidences) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw std::invalid_argument("attack_loss: confidences must lie in [0,1]");
    }
    sum += c * c;
  }
  return -sum / static_cast<double>(confidences.size());
}

void validate_threshold(double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("detection threshold must lie in [0,1]");
  }
}

}  // namespace patchveil
