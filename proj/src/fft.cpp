#include "iirkit/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace iirkit {

namespace {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

void fft_radix2(std::vector<std::complex<double>>& data, bool inverse) {
    size_t n = data.size();
    if (!is_pow2(n)) throw std::invalid_argument("invalid-size error: FFT size must be a power of two");

    // bit-reversal permutation
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
        std::complex<double> wstep(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = data[i + k];
                std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wstep;
            }
        }
    }
    if (inverse) {
        for (auto& x : data) x /= static_cast<double>(n);
    }
}

ResponseSeries spectrum(const Signal& signal, std::optional<size_t> fft_size) {
    if (signal.samples.empty()) throw std::invalid_argument("signal is empty");

    size_t nfft;
    if (fft_size) {
        if (!is_pow2(*fft_size)) {
            throw std::invalid_argument("invalid-size error: FFT size must be a power of two");
        }
        nfft = *fft_size;
    } else {
        nfft = next_pow2(std::min<size_t>(signal.samples.size(), 65536));
    }

    std::vector<std::complex<double>> buf(nfft, 0.0);
    size_t window = std::min(signal.samples.size(), nfft);
    for (size_t i = 0; i < window; ++i) buf[i] = signal.samples[i];
    fft_radix2(buf);

    ResponseSeries out;
    out.kind = ResponseKind::spectrum_db;
    double peak = 0.0;
    for (size_t k = 0; k <= nfft / 2; ++k) peak = std::max(peak, std::abs(buf[k]));
    if (peak == 0.0) peak = 1.0;
    for (size_t k = 0; k <= nfft / 2; ++k) {
        out.abscissa.push_back(static_cast<double>(k) * signal.sample_rate /
                               static_cast<double>(nfft));
        out.ordinate.push_back(to_db(std::abs(buf[k]) / peak));
    }
    return out;
}

}  // namespace iirkit
