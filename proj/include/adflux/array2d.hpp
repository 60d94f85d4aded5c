#ifndef ADFLUX_ARRAY2D_HPP
#define ADFLUX_ARRAY2D_HPP

#include <cassert>
#include <vector>

namespace adflux {

/// Row-major 2D array with an optional halo of ghost entries on each side.
/// Index arguments are logical indices; negative values address the halo.
template <class T>
class Array2D {
public:
  Array2D() = default;
  Array2D(int ni, int nj, int halo = 0, const T& init = T{})
      : ni_(ni), nj_(nj), halo_(halo),
        stride_(nj + 2 * halo), data_((ni + 2 * halo) * (nj + 2 * halo), init) {}

  T& operator()(int i, int j) {
    assert(i >= -halo_ && i < ni_ + halo_ && j >= -halo_ && j < nj_ + halo_);
    return data_[(i + halo_) * stride_ + (j + halo_)];
  }
  const T& operator()(int i, int j) const {
    assert(i >= -halo_ && i < ni_ + halo_ && j >= -halo_ && j < nj_ + halo_);
    return data_[(i + halo_) * stride_ + (j + halo_)];
  }

  int ni() const { return ni_; }
  int nj() const { return nj_; }
  int halo() const { return halo_; }

  void fill(const T& v) { data_.assign(data_.size(), v); }

  T* raw() { return data_.data(); }
  const T* raw() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

private:
  int ni_ = 0, nj_ = 0, halo_ = 0, stride_ = 0;
  std::vector<T> data_;
};

}  // namespace adflux

#endif
