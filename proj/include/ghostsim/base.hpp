#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghostsim {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s, vacuum

/// Transverse position or displacement in a detection plane, metres.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  Vec2& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }
  friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend Vec2 operator*(Vec2 a, double s) { return a *= s; }
  friend Vec2 operator*(double s, Vec2 a) { return a *= s; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  double norm() const { return std::hypot(x, y); }
};

// Error taxonomy; the CLI maps these onto its exit codes.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Row-major raster grid; row 0 is the top row of the image.
template <typename T>
class Grid2D {
 public:
  Grid2D() = default;
  Grid2D(int width, int height, T fill = T{})
      : width_(width), height_(height), data_(static_cast<std::size_t>(width) * height, fill) {
    if (width <= 0 || height <= 0) throw DomainError("Grid2D: non-positive dimensions");
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  bool in_bounds(int ix, int iy) const { return ix >= 0 && ix < width_ && iy >= 0 && iy < height_; }

  T& at(int ix, int iy) { return data_[static_cast<std::size_t>(iy) * width_ + ix]; }
  const T& at(int ix, int iy) const { return data_[static_cast<std::size_t>(iy) * width_ + ix]; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::vector<T>& raw() { return data_; }
  const std::vector<T>& raw() const { return data_; }

  void fill(T v) { data_.assign(data_.size(), v); }

  bool same_dims(const Grid2D& o) const { return width_ == o.width_ && height_ == o.height_; }

  friend bool operator==(const Grid2D& a, const Grid2D& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.data_ == b.data_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

// Grid <-> plane coordinate convention, used identically by masks, the sensor
// and the analysis code: +y is up, column/row indices count cell centres,
// row 0 sits at the top of the raster.
inline double cell_center_x(int ix, int width, double pitch, double origin_x = 0.0) {
  return origin_x + (ix - 0.5 * (width - 1)) * pitch;
}
inline double cell_center_y(int iy, int height, double pitch, double origin_y = 0.0) {
  return origin_y + (0.5 * (height - 1) - iy) * pitch;
}
inline double pos_to_col(double x, int width, double pitch, double origin_x = 0.0) {
  return (x - origin_x) / pitch + 0.5 * (width - 1);
}
inline double pos_to_row(double y, int height, double pitch, double origin_y = 0.0) {
  return 0.5 * (height - 1) - (y - origin_y) / pitch;
}

}  // namespace ghostsim
