#include "podsurge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "podsurge/errors.hpp"

namespace podsurge::spectral {

namespace {

// In-place radix-2 with bit-reversal permutation. sign = -1 forward, +1 inverse.
void fft_in_place(std::vector<std::complex<double>>& x, double sign) {
  const std::size_t n = x.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> even = x[i + j];
        const std::complex<double> odd = x[i + j + len / 2] * w;
        x[i + j] = even + odd;
        x[i + j + len / 2] = even - odd;
        w *= wlen;
      }
    }
  }
}

}  // namespace

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<std::complex<double>> fft(std::span<const double> signal) {
  if (!is_power_of_two(signal.size()) || signal.size() < 2)
    throw ShapeError("fft: length " + std::to_string(signal.size()) +
                     " is not a power of two >= 2");
  for (double v : signal)
    if (!std::isfinite(v)) throw DomainError("fft: non-finite input");
  std::vector<std::complex<double>> x(signal.begin(), signal.end());
  fft_in_place(x, -1.0);
  return x;
}

std::vector<std::complex<double>> ifft(std::span<const std::complex<double>> spectrum) {
  if (!is_power_of_two(spectrum.size()) || spectrum.size() < 2)
    throw ShapeError("ifft: length is not a power of two >= 2");
  std::vector<std::complex<double>> x(spectrum.begin(), spectrum.end());
  fft_in_place(x, +1.0);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (auto& v : x) v *= scale;
  return x;
}

SpectralSignature extract_signature(std::span<const double> signal,
                                    double sample_rate_hz, std::size_t k) {
  if (sample_rate_hz <= 0.0)
    throw DomainError("extract_signature: sample rate must be positive");
  if (k == 0) throw DomainError("extract_signature: k must be >= 1");

  const std::size_t len = signal.size();
  const std::size_t padded = std::max<std::size_t>(2, next_power_of_two(len));
  const std::size_t n_bins = padded / 2 + 1;  // one-sided, DC through Nyquist
  if (k > n_bins)
    throw DomainError("extract_signature: k = " + std::to_string(k) +
                      " exceeds " + std::to_string(n_bins) + " one-sided bins");
  if (len < 2 * k)
    throw ShapeError("extract_signature: need at least 2k samples, got " +
                     std::to_string(len));

  std::vector<double> buf(padded, 0.0);
  std::copy(signal.begin(), signal.end(), buf.begin());
  const auto spectrum = fft(buf);

  // Amplitudes are normalized by the original sample count so that an
  // on-bin cosine of amplitude A (and a constant signal c) come back exactly.
  std::vector<SpectralEntry> bins(n_bins);
  for (std::size_t j = 0; j < n_bins; ++j) {
    const double mag = std::abs(spectrum[j]) / static_cast<double>(len);
    const bool interior = j > 0 && j < padded / 2;
    bins[j].frequency_hz =
        static_cast<double>(j) * sample_rate_hz / static_cast<double>(padded);
    bins[j].amplitude = interior ? 2.0 * mag : mag;
    double ph = std::arg(spectrum[j]);  // in [-pi, pi]
    if (ph <= -std::numbers::pi) ph = std::numbers::pi;
    bins[j].phase = ph;
  }
  std::stable_sort(bins.begin(), bins.end(),
                   [](const SpectralEntry& a, const SpectralEntry& b) {
                     if (a.amplitude != b.amplitude) return a.amplitude > b.amplitude;
                     return a.frequency_hz < b.frequency_hz;
                   });
  bins.resize(k);

  SpectralSignature sig;
  sig.entries = std::move(bins);
  sig.sample_rate_hz = sample_rate_hz;
  sig.k = k;
  return sig;
}

std::vector<double> reconstruct_from_signature(const SpectralSignature& sig,
                                               std::span<const double> times) {
  std::vector<double> out(times.size(), 0.0);
  for (const auto& e : sig.entries) {
    const double omega = 2.0 * std::numbers::pi * e.frequency_hz;
    for (std::size_t i = 0; i < times.size(); ++i)
      out[i] += e.amplitude * std::cos(omega * times[i] + e.phase);
  }
  return out;
}

}  // namespace podsurge::spectral
