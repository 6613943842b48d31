#pragma once

#include <string>
#include <vector>

namespace iirkit {

struct Signal {
    std::vector<double> samples;  // in [-1, 1]
    double sample_rate = 0.0;
    int source_bit_depth = 16;
};

// 16-bit PCM RIFF/WAVE reader; multi-channel input is downmixed by
// arithmetic mean. Unknown chunks are skipped.
Signal read_wav(const std::string& path);

// 16-bit PCM mono writer; samples are saturated to [-1, 1 - 1/32768]
// and rounded half away from zero.
void write_wav(const Signal& signal, const std::string& path);

}  // namespace iirkit
