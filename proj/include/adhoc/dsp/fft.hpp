#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace adhoc::dsp {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 FFT. Forward is un-normalized, inverse is
// scaled by 1/n. Twiddles are computed in double regardless of S.
template <class S>
void fft_inplace(std::vector<std::complex<S>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft: size must be a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u(a[i + k]);
        std::complex<double> v(a[i + k + len / 2]);
        v *= w;
        a[i + k] = std::complex<S>(static_cast<S>(u.real() + v.real()),
                                   static_cast<S>(u.imag() + v.imag()));
        a[i + k + len / 2] = std::complex<S>(static_cast<S>(u.real() - v.real()),
                                             static_cast<S>(u.imag() - v.imag()));
        w *= wl;
      }
    }
  }
  if (inverse) {
    const S inv_n = static_cast<S>(1.0 / static_cast<double>(n));
    for (auto& x : a) x *= inv_n;
  }
}

// Real FFT: n real samples -> n/2+1 bins.
template <class S>
std::vector<std::complex<S>> rfft(std::span<const S> x, std::size_t n) {
  std::vector<std::complex<S>> a(n);
  const std::size_t m = std::min(n, x.size());
  for (std::size_t i = 0; i < m; ++i) a[i] = std::complex<S>(x[i], S(0));
  fft_inplace(a, false);
  a.resize(n / 2 + 1);
  return a;
}

// Inverse of rfft: n/2+1 bins -> n real samples (1/n scaling).
template <class S>
std::vector<S> irfft(std::span<const std::complex<S>> bins, std::size_t n) {
  if (bins.size() != n / 2 + 1) throw std::invalid_argument("irfft: bin count mismatch");
  std::vector<std::complex<S>> a(n);
  for (std::size_t k = 0; k <= n / 2; ++k) a[k] = bins[k];
  for (std::size_t k = n / 2 + 1; k < n; ++k) a[k] = std::conj(bins[n - k]);
  fft_inplace(a, true);
  std::vector<S> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i].real();
  return out;
}

// Linear convolution via FFT; output length = x.size() + h.size() - 1.
inline std::vector<double> fft_convolve(std::span<const double> x, std::span<const double> h) {
  if (x.empty() || h.empty()) return {};
  const std::size_t out_len = x.size() + h.size() - 1;
  std::size_t n = 1;
  while (n < out_len) n <<= 1;
  std::vector<std::complex<double>> a(n), b(n);
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = x[i];
  for (std::size_t i = 0; i < h.size(); ++i) b[i] = h[i];
  fft_inplace(a, false);
  fft_inplace(b, false);
  for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
  fft_inplace(a, true);
  std::vector<double> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = a[i].real();
  return out;
}

}  // namespace adhoc::dsp
