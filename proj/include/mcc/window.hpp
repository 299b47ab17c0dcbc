#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mcc {

// Fixed-length multichannel time-series segment, stored row-major
// (frame index varies slowest). The unit of training and inference.
struct Window {
  std::vector<double> values;  // length * channels
  int length = 0;
  int channels = 0;
  std::optional<double> sample_rate_hz;  // provenance only

  Window() = default;
  Window(int len, int ch, double fill = 0.0)
      : values(static_cast<size_t>(len) * ch, fill), length(len), channels(ch) {}

  double at(int t, int d) const { return values[static_cast<size_t>(t) * channels + d]; }
  double& at(int t, int d) { return values[static_cast<size_t>(t) * channels + d]; }

  bool same_shape(const Window& o) const {
    return length == o.length && channels == o.channels;
  }
};

// Builds a window from per-frame rows; all rows must share one width.
Window window_from_rows(const std::vector<std::vector<double>>& rows);

// Single scalar series as an Lx1 window.
Window window_from_series(const std::vector<double>& series);

// Shape and value equality; sample_rate_hz is provenance and ignored.
bool operator==(const Window& a, const Window& b);
inline bool operator!=(const Window& a, const Window& b) { return !(a == b); }

std::string shape_string(const Window& w);

// Throws std::invalid_argument if any value is non-finite.
void check_finite(const Window& w, const char* what);

}  // namespace mcc
