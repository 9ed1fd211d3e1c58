#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "adhoc/dsp/fft.hpp"

namespace adhoc::dsp {

enum class Window { hann };

struct StftConfig {
  int win_len = 512;
  int hop = 128;
  Window window = Window::hann;
};

// Complex spectrogram, bin-major: re[f * frames + t].
template <class S>
struct Spectrogram {
  int bins = 0;
  int frames = 0;
  std::vector<S> re;
  std::vector<S> im;
  int sample_rate = 16000;
  int win_len = 512;
  int hop = 128;

  S& re_at(int f, int t) { return re[static_cast<std::size_t>(f) * frames + t]; }
  S& im_at(int f, int t) { return im[static_cast<std::size_t>(f) * frames + t]; }
  S re_at(int f, int t) const { return re[static_cast<std::size_t>(f) * frames + t]; }
  S im_at(int f, int t) const { return im[static_cast<std::size_t>(f) * frames + t]; }
};

// Periodic Hann: w[i] = 0.5 - 0.5*cos(2*pi*i/n), so w[0] = 0.
template <class S>
std::vector<S> hann_window(int n) {
  if (n < 2) throw std::invalid_argument("hann_window: n must be >= 2");
  std::vector<S> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = static_cast<S>(0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / n));
  }
  return w;
}

// Frame count for centered analysis (reflect pad of win/2 on both ends).
inline int stft_num_frames(std::int64_t len, const StftConfig& cfg, bool center = true) {
  len = std::max<std::int64_t>(len, cfg.win_len);
  if (center) return static_cast<int>((len + cfg.hop - 1) / cfg.hop);
  return static_cast<int>((len - cfg.win_len) / cfg.hop + 1);
}

// Centered STFT: signal is reflect-padded by win/2 on each side, frame t is
// centered at sample t*hop, T = ceil(len/hop). Signals shorter than win_len
// are zero-padded up to win_len first. center=false frames the raw signal
// with no padding (T = floor((len-win)/hop)+1).
template <class S>
Spectrogram<S> stft(std::span<const S> signal, const StftConfig& cfg, int sample_rate = 16000,
                    bool center = true) {
  const int win = cfg.win_len;
  const int hop = cfg.hop;
  if (win < 2 || hop < 1 || hop > win) throw std::invalid_argument("stft: bad config");

  std::vector<S> padded_storage;
  std::span<const S> x = signal;
  if (static_cast<int>(signal.size()) < win) {
    padded_storage.assign(signal.begin(), signal.end());
    padded_storage.resize(win, S(0));
    x = padded_storage;
  }
  const std::int64_t len = static_cast<std::int64_t>(x.size());

  Spectrogram<S> spec;
  spec.bins = win / 2 + 1;
  spec.frames = stft_num_frames(len, cfg, center);
  spec.sample_rate = sample_rate;
  spec.win_len = win;
  spec.hop = hop;
  spec.re.assign(static_cast<std::size_t>(spec.bins) * spec.frames, S(0));
  spec.im.assign(static_cast<std::size_t>(spec.bins) * spec.frames, S(0));

  const std::vector<S> w = hann_window<S>(win);
  std::vector<S> frame(win);
  const int half = win / 2;
  for (int t = 0; t < spec.frames; ++t) {
    const std::int64_t start = static_cast<std::int64_t>(t) * hop - (center ? half : 0);
    for (int i = 0; i < win; ++i) {
      std::int64_t j = start + i;
      if (center) {
        if (j < 0) j = -j;
        if (j >= len) j = 2 * len - 2 - j;
      }
      frame[i] = x[static_cast<std::size_t>(j)] * w[i];
    }
    auto bins = rfft<S>(frame, static_cast<std::size_t>(win));
    for (int f = 0; f < spec.bins; ++f) {
      spec.re_at(f, t) = bins[f].real();
      spec.im_at(f, t) = bins[f].imag();
    }
  }
  return spec;
}

// Weighted overlap-add synthesis (window applied on synthesis, normalized by
// the accumulated squared window). Exact inverse of the centered stft above.
// out_len < 0 means frames*hop (the original length when hop divides it).
template <class S>
std::vector<S> istft(const Spectrogram<S>& spec, const StftConfig& cfg, std::int64_t out_len = -1,
                     bool center = true) {
  if (spec.win_len != cfg.win_len || spec.hop != cfg.hop)
    throw std::invalid_argument("istft: config does not match spectrogram");
  const int win = cfg.win_len;
  const int hop = cfg.hop;
  if (spec.bins != win / 2 + 1) throw std::invalid_argument("istft: bin count mismatch");

  const std::int64_t padded = static_cast<std::int64_t>(spec.frames - 1) * hop + win;
  std::vector<double> num(static_cast<std::size_t>(padded), 0.0);
  std::vector<double> den(static_cast<std::size_t>(padded), 0.0);
  const std::vector<S> w = hann_window<S>(win);

  std::vector<std::complex<S>> bins(spec.bins);
  for (int t = 0; t < spec.frames; ++t) {
    for (int f = 0; f < spec.bins; ++f) bins[f] = {spec.re_at(f, t), spec.im_at(f, t)};
    std::vector<S> frame = irfft<S>(bins, static_cast<std::size_t>(win));
    const std::int64_t start = static_cast<std::int64_t>(t) * hop;
    for (int i = 0; i < win; ++i) {
      num[static_cast<std::size_t>(start + i)] += static_cast<double>(frame[i]) * w[i];
      den[static_cast<std::size_t>(start + i)] += static_cast<double>(w[i]) * w[i];
    }
  }

  const std::int64_t offset = center ? win / 2 : 0;
  if (out_len < 0) out_len = static_cast<std::int64_t>(spec.frames) * hop;
  if (!center && out_len > padded) out_len = padded;
  std::vector<S> out(static_cast<std::size_t>(out_len), S(0));
  for (std::int64_t i = 0; i < out_len; ++i) {
    const std::int64_t j = i + offset;
    if (j < padded && den[static_cast<std::size_t>(j)] > 1e-12) {
      out[static_cast<std::size_t>(i)] =
          static_cast<S>(num[static_cast<std::size_t>(j)] / den[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

// Gain g applied to noise so that 10*log10(P_speech / P_noise') = snr_db,
// powers measured as mean square over the full clips.
template <class S>
std::vector<S> rescale_to_snr(std::span<const S> speech, std::span<const S> noise,
                              double snr_db) {
  if (speech.empty() || noise.empty())
    throw std::invalid_argument("rescale_to_snr: empty input");
  double p_speech = 0.0, p_noise = 0.0;
  for (S v : speech) p_speech += static_cast<double>(v) * v;
  for (S v : noise) p_noise += static_cast<double>(v) * v;
  p_speech /= static_cast<double>(speech.size());
  p_noise /= static_cast<double>(noise.size());
  if (p_speech <= 0.0 || p_noise <= 0.0)
    throw std::invalid_argument("rescale_to_snr: zero-power input");
  const double g = std::sqrt(p_speech / (p_noise * std::pow(10.0, snr_db / 10.0)));
  std::vector<S> out(noise.begin(), noise.end());
  for (S& v : out) v = static_cast<S>(v * g);
  return out;
}

}  // namespace adhoc::dsp
