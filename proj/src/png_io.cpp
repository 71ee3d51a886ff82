#include "chartalt/png_io.hpp"

#include <zlib.h>

#include <cstring>

#include "chartalt/errors.hpp"

namespace chartalt::png {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    return (static_cast<std::uint32_t>(p[0]) << 24) | (static_cast<std::uint32_t>(p[1]) << 16) |
           (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                  const std::vector<std::uint8_t>& data) {
    put_u32(out, static_cast<std::uint32_t>(data.size()));
    const std::size_t crc_start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    const uLong crc = crc32(0L, out.data() + crc_start, static_cast<uInt>(out.size() - crc_start));
    put_u32(out, static_cast<std::uint32_t>(crc));
}

std::vector<std::uint8_t> text_chunk_data(const std::string& keyword, const std::string& value) {
    std::vector<std::uint8_t> data(keyword.begin(), keyword.end());
    data.push_back(0);
    data.insert(data.end(), value.begin(), value.end());
    return data;
}

constexpr std::uint8_t kSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

struct ChunkView {
    std::size_t offset;  // start of length field
    std::size_t total;   // length + type + data + crc
    char type[5];
    const std::uint8_t* data;
    std::uint32_t size;
};

std::vector<ChunkView> parse_chunks(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kSignature, 8) != 0) {
        throw ParseError("not a PNG file");
    }
    std::vector<ChunkView> chunks;
    std::size_t pos = 8;
    while (pos + 12 <= bytes.size()) {
        ChunkView c{};
        c.offset = pos;
        c.size = get_u32(bytes.data() + pos);
        std::memcpy(c.type, bytes.data() + pos + 4, 4);
        c.type[4] = 0;
        if (pos + 12 + c.size > bytes.size()) throw ParseError("truncated PNG chunk");
        c.data = bytes.data() + pos + 8;
        c.total = 12 + c.size;
        chunks.push_back(c);
        pos += c.total;
        if (std::strcmp(c.type, "IEND") == 0) break;
    }
    return chunks;
}

}  // namespace

std::vector<std::uint8_t> encode(std::size_t width, std::size_t height,
                                 const std::vector<std::uint8_t>& rgb,
                                 const std::vector<std::pair<std::string, std::string>>& text) {
    if (rgb.size() != width * height * 3) throw Error("rgb buffer size mismatch");

    // Filter byte 0 per scanline.
    std::vector<std::uint8_t> raw;
    raw.reserve(height * (1 + width * 3));
    for (std::size_t yy = 0; yy < height; ++yy) {
        raw.push_back(0);
        const std::uint8_t* row = rgb.data() + yy * width * 3;
        raw.insert(raw.end(), row, row + width * 3);
    }

    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> compressed(bound);
    if (compress2(compressed.data(), &bound, raw.data(), static_cast<uLong>(raw.size()), 6) != Z_OK) {
        throw Error("zlib compression failed");
    }
    compressed.resize(bound);

    std::vector<std::uint8_t> out(kSignature, kSignature + 8);

    std::vector<std::uint8_t> ihdr;
    put_u32(ihdr, static_cast<std::uint32_t>(width));
    put_u32(ihdr, static_cast<std::uint32_t>(height));
    ihdr.push_back(8);  // bit depth
    ihdr.push_back(2);  // color type: truecolor
    ihdr.push_back(0);
    ihdr.push_back(0);
    ihdr.push_back(0);
    append_chunk(out, "IHDR", ihdr);

    for (const auto& [k, v] : text) append_chunk(out, "tEXt", text_chunk_data(k, v));

    append_chunk(out, "IDAT", compressed);
    append_chunk(out, "IEND", {});
    return out;
}

std::optional<std::string> read_text(const std::vector<std::uint8_t>& png_bytes,
                                     const std::string& keyword) {
    for (const auto& c : parse_chunks(png_bytes)) {
        if (std::strcmp(c.type, "tEXt") != 0) continue;
        const std::uint8_t* sep =
            static_cast<const std::uint8_t*>(std::memchr(c.data, 0, c.size));
        if (!sep) continue;
        const std::string key(reinterpret_cast<const char*>(c.data), static_cast<std::size_t>(sep - c.data));
        if (key != keyword) continue;
        return std::string(reinterpret_cast<const char*>(sep + 1),
                           c.size - static_cast<std::size_t>(sep - c.data) - 1);
    }
    return std::nullopt;
}

std::vector<std::uint8_t> with_text(const std::vector<std::uint8_t>& png_bytes,
                                    const std::string& keyword, const std::string& value) {
    const auto chunks = parse_chunks(png_bytes);
    std::vector<std::uint8_t> out(kSignature, kSignature + 8);
    bool inserted = false;
    for (const auto& c : chunks) {
        bool skip = false;
        if (std::strcmp(c.type, "tEXt") == 0) {
            const std::uint8_t* sep =
                static_cast<const std::uint8_t*>(std::memchr(c.data, 0, c.size));
            if (sep &&
                std::string(reinterpret_cast<const char*>(c.data), static_cast<std::size_t>(sep - c.data)) == keyword) {
                skip = true;  // replaced below
            }
        }
        if (!skip) {
            out.insert(out.end(), png_bytes.begin() + static_cast<std::ptrdiff_t>(c.offset),
                       png_bytes.begin() + static_cast<std::ptrdiff_t>(c.offset + c.total));
        }
        if (!inserted && std::strcmp(c.type, "IHDR") == 0) {
            append_chunk(out, "tEXt", text_chunk_data(keyword, value));
            inserted = true;
        }
    }
    return out;
}

}  // namespace chartalt::png
