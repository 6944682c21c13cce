#include "leplab/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace leplab {

Radix2Fft::Radix2Fft(std::size_t size) : size_(size) {
  if (size < 2 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("Radix2Fft: size must be a power of two >= 2");
  }
  bit_reversal_.resize(size);
  std::size_t log2 = 0;
  while ((std::size_t(1) << log2) < size) ++log2;
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t rev = 0;
    for (std::size_t b = 0; b < log2; ++b) {
      if (i & (std::size_t(1) << b)) rev |= std::size_t(1) << (log2 - 1 - b);
    }
    bit_reversal_[i] = rev;
  }
  twiddles_.resize(size / 2);
  for (std::size_t k = 0; k < size / 2; ++k) {
    const double angle = -2.0 * std::numbers::pi * double(k) / double(size);
    twiddles_[k] = {std::cos(angle), std::sin(angle)};
  }
}

void Radix2Fft::transform(std::vector<std::complex<double>>& a, bool invert) const {
  if (a.size() != size_) throw std::invalid_argument("Radix2Fft: size mismatch");
  for (std::size_t i = 0; i < size_; ++i) {
    const std::size_t j = bit_reversal_[i];
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= size_; len <<= 1) {
    const std::size_t stride = size_ / len;
    for (std::size_t start = 0; start < size_; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> w = twiddles_[k * stride];
        if (invert) w = std::conj(w);
        const std::complex<double> u = a[start + k];
        const std::complex<double> v = a[start + k + len / 2] * w;
        a[start + k] = u + v;
        a[start + k + len / 2] = u - v;
      }
    }
  }
  if (invert) {
    const double scale = 1.0 / double(size_);
    for (auto& v : a) v *= scale;
  }
}

void Radix2Fft::forward(std::vector<std::complex<double>>& a) const {
  transform(a, false);
}

void Radix2Fft::inverse(std::vector<std::complex<double>>& a) const {
  transform(a, true);
}

}  // namespace leplab
