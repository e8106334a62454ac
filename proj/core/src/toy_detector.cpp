#include "patchveil/toy_detector.hpp"

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>
#include <stdexcept>

namespace patchveil {

namespace {

double logit(double p) { return std::log(p / (1.0 - p)); }

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

std::string fnv1a_hex(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace

ToyDetector::ToyDetector(std::string id, std::uint64_t template_seed,
                         ToyDetectorOptions options)
    : id_(std::move(id)), template_seed_(template_seed), options_(options) {
  if (options_.num_templates < 1 || options_.window < 1 || options_.stride < 1) {
    throw std::invalid_argument("toy detector: bad geometry options");
  }
  if (!(options_.background_confidence > 0.0 &&
        options_.background_confidence < options_.planted_confidence &&
        options_.planted_confidence < 1.0)) {
    throw std::invalid_argument("toy detector: bad confidence calibration");
  }

  offset_ = logit(options_.background_confidence);
  slope_ = logit(options_.planted_confidence) - offset_;

  std::mt19937_64 rng(template_seed_);
  std::bernoulli_distribution spike(options_.spike_density);
  std::bernoulli_distribution coin(0.5);
  std::normal_distribution<float> noise(0.0f, options_.noise_sigma);

  const std::size_t n =
      static_cast<std::size_t>(options_.window) * options_.window * kChannels;
  templates_.reserve(options_.num_templates);
  for (int t = 0; t < options_.num_templates; ++t) {
    std::vector<float> values(n);
    for (auto& v : values) {
      v = spike(rng) ? (coin(rng) ? 1.0f : -1.0f) : noise(rng);
    }
    double mean = 0.0;
    for (float v : values) mean += v;
    mean /= static_cast<double>(n);
    double norm_sq = 0.0;
    for (auto& v : values) {
      v = static_cast<float>(v - mean);
      norm_sq += static_cast<double>(v) * v;
    }
    const double inv_norm = 1.0 / std::sqrt(norm_sq);
    for (auto& v : values) v = static_cast<float>(v * inv_norm);
    templates_.push_back(std::move(values));
  }

  std::string blob;
  for (const auto& t : templates_) {
    const std::size_t bytes = t.size() * sizeof(float);
    const std::size_t off = blob.size();
    blob.resize(off + bytes);
    std::memcpy(blob.data() + off, t.data(), bytes);
  }
  weight_hash_ = fnv1a_hex(blob.data(), blob.size());
}

double ToyDetector::correlate(const Image& image, int y0, int x0,
                              const std::vector<float>& tmpl) const {
  const int w = options_.window;
  const int row_len = w * kChannels;
  double acc = 0.0;
  for (int dy = 0; dy < w; ++dy) {
    const float* img_row = &image.pixels[(static_cast<std::size_t>(y0 + dy) *
                                              image.width +
                                          x0) *
                                         kChannels];
    const float* tpl_row = &tmpl[static_cast<std::size_t>(dy) * row_len];
    double row_acc = 0.0;
    for (int i = 0; i < row_len; ++i) {
      row_acc += static_cast<double>(img_row[i]) * tpl_row[i];
    }
    acc += row_acc;
  }
  return acc;
}

std::vector<ToyDetector::WindowScore> ToyDetector::score_windows(
    const Image& image, double threshold) const {
  validate_threshold(threshold);
  const int w = options_.window;
  if (image.height < w || image.width < w) return {};

  std::vector<WindowScore> hits;
  for (int y0 = 0; y0 + w <= image.height; y0 += options_.stride) {
    for (int x0 = 0; x0 + w <= image.width; x0 += options_.stride) {
      for (int t = 0; t < static_cast<int>(templates_.size()); ++t) {
        const double corr = correlate(image, y0, x0, templates_[t]);
        const double conf = sigmoid(slope_ * corr + offset_);
        if (conf >= threshold) {
          hits.push_back({y0, x0, t, corr, conf});
        }
      }
    }
  }
  return hits;
}

std::vector<Detection> ToyDetector::detect(const Image& image,
                                           double threshold) const {
  const auto hits = score_windows(image, threshold);
  std::vector<Detection> detections;
  detections.reserve(hits.size());
  const float w = static_cast<float>(options_.window);
  for (const auto& h : hits) {
    Detection d;
    d.box = {static_cast<float>(h.x0), static_cast<float>(h.y0),
             static_cast<float>(h.x0) + w, static_cast<float>(h.y0) + w};
    d.confidence = static_cast<float>(h.confidence);
    d.class_id = h.template_index;
    d.detector_id = id_;
    detections.push_back(d);
  }
  return detections;
}

ImageGradient ToyDetector::loss_gradient(const Image& image,
                                         double threshold) const {
  const auto hits = score_windows(image, threshold);
  if (hits.empty()) {
    throw std::invalid_argument(
        "loss_gradient: no detections above threshold, gradient undefined");
  }

  ImageGradient grad(image.height, image.width);
  const double k = static_cast<double>(hits.size());
  const int w = options_.window;
  const int row_len = w * kChannels;
  for (const auto& h : hits) {
    // d/dcorr of -(1/k) sum c^2 through c = sigmoid(slope*corr + offset).
    const double coeff =
        -(2.0 / k) * h.confidence * h.confidence * (1.0 - h.confidence) * slope_;
    const auto& tmpl = templates_[h.template_index];
    for (int dy = 0; dy < w; ++dy) {
      float* g_row = &grad.values[(static_cast<std::size_t>(h.y0 + dy) *
                                       image.width +
                                   h.x0) *
                                  kChannels];
      const float* tpl_row = &tmpl[static_cast<std::size_t>(dy) * row_len];
      for (int i = 0; i < row_len; ++i) {
        g_row[i] += static_cast<float>(coeff * tpl_row[i]);
      }
    }
  }
  return grad;
}

}  // namespace patchveil
