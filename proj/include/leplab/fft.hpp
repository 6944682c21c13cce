#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace leplab {

/// In-place iterative radix-2 FFT with precomputed twiddle and bit-reversal
/// tables. Power-of-two sizes only; fully deterministic.
class Radix2Fft {
public:
  explicit Radix2Fft(std::size_t size);

  std::size_t size() const { return size_; }

  /// Unnormalized forward transform: A_k = sum_j a_j exp(-2 pi i j k / M).
  void forward(std::vector<std::complex<double>>& a) const;

  /// Inverse transform including the 1/M factor.
  void inverse(std::vector<std::complex<double>>& a) const;

private:
  void transform(std::vector<std::complex<double>>& a, bool invert) const;

  std::size_t size_;
  std::vector<std::size_t> bit_reversal_;
  std::vector<std::complex<double>> twiddles_;  // exp(-2 pi i k / M), k < M/2
};

}  // namespace leplab
