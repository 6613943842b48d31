#include "iirkit/wav.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace iirkit {

namespace {

uint32_t read_u32(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16(const uint8_t* p) {
    return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void append_u32(std::vector<uint8_t>& v, uint32_t x) {
    v.push_back(x & 0xff);
    v.push_back((x >> 8) & 0xff);
    v.push_back((x >> 16) & 0xff);
    v.push_back((x >> 24) & 0xff);
}

void append_u16(std::vector<uint8_t>& v, uint16_t x) {
    v.push_back(x & 0xff);
    v.push_back((x >> 8) & 0xff);
}

void append_tag(std::vector<uint8_t>& v, const char* tag) {
    v.insert(v.end(), tag, tag + 4);
}

}  // namespace

Signal read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("io error: cannot open " + path);
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());

    if (data.size() < 12 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
        std::memcmp(data.data() + 8, "WAVE", 4) != 0) {
        throw std::runtime_error("corrupt-file error: not a RIFF/WAVE file");
    }

    bool have_fmt = false;
    uint16_t format = 0, channels = 0, bits = 0;
    uint32_t rate = 0;
    const uint8_t* pcm = nullptr;
    size_t pcm_bytes = 0;

    size_t pos = 12;
    while (pos + 8 <= data.size()) {
        const uint8_t* hdr = data.data() + pos;
        uint32_t chunk_size = read_u32(hdr + 4);
        pos += 8;
        if (pos + chunk_size > data.size()) {
            throw std::runtime_error("corrupt-file error: truncated chunk");
        }
        if (std::memcmp(hdr, "fmt ", 4) == 0) {
            if (chunk_size < 16) throw std::runtime_error("corrupt-file error: short fmt chunk");
            format = read_u16(data.data() + pos);
            channels = read_u16(data.data() + pos + 2);
            rate = read_u32(data.data() + pos + 4);
            bits = read_u16(data.data() + pos + 14);
            have_fmt = true;
        } else if (std::memcmp(hdr, "data", 4) == 0) {
            pcm = data.data() + pos;
            pcm_bytes = chunk_size;
        }
        pos += chunk_size + (chunk_size & 1);  // chunks are word-aligned
    }

    if (!have_fmt || pcm == nullptr) {
        throw std::runtime_error("corrupt-file error: missing fmt or data chunk");
    }
    if (format != 1) throw std::runtime_error("unsupported-format error: only PCM (format 1)");
    if (bits != 16) throw std::runtime_error("unsupported-format error: only 16-bit samples");
    if (channels == 0) throw std::runtime_error("corrupt-file error: zero channels");

    size_t frame_bytes = 2u * channels;
    size_t frames = pcm_bytes / frame_bytes;
    if (frames == 0) throw std::runtime_error("corrupt-file error: empty data chunk");

    Signal out;
    out.sample_rate = static_cast<double>(rate);
    out.source_bit_depth = 16;
    out.samples.reserve(frames);
    for (size_t f = 0; f < frames; ++f) {
        double acc = 0.0;
        for (size_t c = 0; c < channels; ++c) {
            const uint8_t* s = pcm + f * frame_bytes + 2 * c;
            int16_t v = static_cast<int16_t>(read_u16(s));
            acc += static_cast<double>(v);
        }
        out.samples.push_back(acc / (32768.0 * channels));
    }
    return out;
}

void write_wav(const Signal& signal, const std::string& path) {
    for (double s : signal.samples) {
        if (!std::isfinite(s)) throw std::invalid_argument("samples must be finite");
    }

    std::vector<uint8_t> payload;
    payload.reserve(signal.samples.size() * 2);
    for (double s : signal.samples) {
        double scaled = s * 32768.0;
        double clipped = std::min(32767.0, std::max(-32768.0, scaled));
        int16_t q = static_cast<int16_t>(std::round(clipped));  // half away from zero
        append_u16(payload, static_cast<uint16_t>(q));
    }

    std::vector<uint8_t> file;
    append_tag(file, "RIFF");
    append_u32(file, static_cast<uint32_t>(36 + payload.size()));
    append_tag(file, "WAVE");
    append_tag(file, "fmt ");
    append_u32(file, 16);
    append_u16(file, 1);  // PCM
    append_u16(file, 1);  // mono
    uint32_t rate = static_cast<uint32_t>(std::lround(signal.sample_rate));
    append_u32(file, rate);
    append_u32(file, rate * 2);  // byte rate
    append_u16(file, 2);         // block align
    append_u16(file, 16);        // bits per sample
    append_tag(file, "data");
    append_u32(file, static_cast<uint32_t>(payload.size()));
    file.insert(file.end(), payload.begin(), payload.end());

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("io error: cannot write " + path);
    out.write(reinterpret_cast<const char*>(file.data()), static_cast<long>(file.size()));
    if (!out) throw std::runtime_error("io error: short write to " + path);
}

}  // namespace iirkit
