#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "iirkit/analysis.hpp"
#include "iirkit/wav.hpp"

namespace iirkit {

// In-place radix-2 Cooley-Tukey; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data, bool inverse = false);

// Peak-normalized magnitude spectrum in dB over [0, fs/2]. Default size:
// next power of two >= min(length, 65536), zero-padded; an explicit size
// must be a power of two.
ResponseSeries spectrum(const Signal& signal, std::optional<size_t> fft_size = std::nullopt);

}  // namespace iirkit
