#include "hpit/wav.hpp"

#include "hpit/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

namespace hpit {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t le16(const std::uint8_t* p) { return static_cast<std::uint16_t>(p[0] | (p[1] << 8)); }
std::uint32_t le32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}
void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) out.push_back(static_cast<std::uint8_t>((v >> (8 * k)) & 0xFF));
}
void put_tag(std::vector<std::uint8_t>& out, const char* tag) { out.insert(out.end(), tag, tag + 4); }

bool tag_is(const std::uint8_t* p, const char* tag) { return std::memcmp(p, tag, 4) == 0; }

}  // namespace

AudioSignal decode_wav(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 12 || !tag_is(bytes.data(), "RIFF") || !tag_is(bytes.data() + 8, "WAVE")) {
        throw Error(ErrorKind::Parse, "malformed WAV header: missing RIFF/WAVE signature");
    }

    bool have_fmt = false;
    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    std::span<const std::uint8_t> data;
    bool have_data = false;

    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const std::uint8_t* chunk = bytes.data() + pos;
        const std::size_t available = bytes.size() - pos - 8;
        const std::size_t size = std::min<std::size_t>(le32(chunk + 4), available);
        const std::uint8_t* body = chunk + 8;
        if (tag_is(chunk, "fmt ")) {
            if (size < 16) throw Error(ErrorKind::Parse, "malformed WAV header: fmt chunk too short");
            format = le16(body);
            channels = le16(body + 2);
            rate = le32(body + 4);
            bits = le16(body + 14);
            if (format == kFormatExtensible) {
                if (size < 40) throw Error(ErrorKind::Parse, "malformed WAV header: extensible fmt chunk too short");
                format = le16(body + 24);  // first two bytes of the sub-format GUID
            }
            have_fmt = true;
        } else if (tag_is(chunk, "data")) {
            data = bytes.subspan(pos + 8, size);
            have_data = true;
        }
        pos += 8 + size + (size & 1);
    }

    if (!have_fmt) throw Error(ErrorKind::Parse, "malformed WAV header: no fmt chunk");
    if (!have_data) throw Error(ErrorKind::Parse, "malformed WAV header: no data chunk");
    if (channels == 0) throw Error(ErrorKind::Parse, "malformed WAV header: zero channels");
    if (rate == 0) throw Error(ErrorKind::Parse, "malformed WAV header: zero sample rate");

    const bool pcm16 = format == kFormatPcm && bits == 16;
    const bool float32 = format == kFormatFloat && bits == 32;
    if (!pcm16 && !float32) {
        const std::string name = format == kFormatPcm     ? "PCM"
                                 : format == kFormatFloat ? "IEEE float"
                                                          : "format code " + std::to_string(format);
        throw Error(ErrorKind::Unsupported,
                    "unsupported WAV encoding: " + name + " " + std::to_string(bits) + "-bit (need 16-bit PCM or 32-bit float)");
    }

    const std::size_t frame_bytes = static_cast<std::size_t>(channels) * (bits / 8);
    const std::size_t frames = data.size() / frame_bytes;
    if (frames == 0) throw Error(ErrorKind::EmptyInput, "WAV file has zero-length audio data");

    AudioSignal out;
    out.sample_rate = rate;
    out.samples.resize(frames);
    for (std::size_t k = 0; k < frames; ++k) {
        const std::uint8_t* p = data.data() + k * frame_bytes;
        if (pcm16) {
            out.samples[k] = static_cast<double>(static_cast<std::int16_t>(le16(p))) / 32768.0;
        } else {
            out.samples[k] = static_cast<double>(std::bit_cast<float>(le32(p)));
        }
    }
    return out;
}

AudioSignal read_wav(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(ErrorKind::Io, "failed reading '" + path.string() + "'");
    try {
        return decode_wav(bytes);
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.what());
    }
}

std::vector<std::uint8_t> encode_wav(const AudioSignal& signal) {
    const auto data_bytes = static_cast<std::uint32_t>(signal.samples.size() * 2);
    std::vector<std::uint8_t> out;
    out.reserve(44 + data_bytes);
    put_tag(out, "RIFF");
    put32(out, 36 + data_bytes);
    put_tag(out, "WAVE");
    put_tag(out, "fmt ");
    put32(out, 16);
    put16(out, kFormatPcm);
    put16(out, 1);
    put32(out, signal.sample_rate);
    put32(out, signal.sample_rate * 2);
    put16(out, 2);
    put16(out, 16);
    put_tag(out, "data");
    put32(out, data_bytes);
    for (double v : signal.samples) {
        const double q = std::clamp(std::round(v * 32768.0), -32768.0, 32767.0);
        put16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    }
    return out;
}

void write_wav(const std::filesystem::path& path, const AudioSignal& signal) {
    const auto bytes = encode_wav(signal);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

}  // namespace hpit
