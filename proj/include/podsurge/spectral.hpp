#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace podsurge::spectral {

/// One entry of a truncated one-sided spectrum: cosine-basis
/// amplitude * cos(2*pi*frequency*t + phase).
struct SpectralEntry {
  double frequency_hz = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;  // radians in (-pi, pi]
};

/// Top-k spectral triples of a real signal, sorted by amplitude
/// descending (ties broken toward lower frequency).
struct SpectralSignature {
  std::vector<SpectralEntry> entries;
  double sample_rate_hz = 0.0;
  std::size_t k = 0;
};

/// Forward DFT (negative-exponent kernel, unnormalized) of a real signal
/// whose length is a power of two. Radix-2 iterative Cooley-Tukey.
std::vector<std::complex<double>> fft(std::span<const double> signal);

/// Inverse of fft including the 1/N scaling.
std::vector<std::complex<double>> ifft(std::span<const std::complex<double>> spectrum);

/// Zero-pads to the next power of two, takes the one-sided amplitude
/// spectrum (2|X_j|/L for interior bins, |X_j|/L for DC and Nyquist, with
/// L the original sample count) and returns the k largest-amplitude bins.
SpectralSignature extract_signature(std::span<const double> signal,
                                    double sample_rate_hz, std::size_t k);

/// Sum of amplitude*cos(2*pi*f*t + phase) over the signature entries,
/// evaluated at each requested time.
std::vector<double> reconstruct_from_signature(const SpectralSignature& sig,
                                               std::span<const double> times);

inline bool is_power_of_two(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }
std::size_t next_power_of_two(std::size_t n);

}  // namespace podsurge::spectral
