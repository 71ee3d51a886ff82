#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chartalt::png {

// Encodes an 8-bit RGB image (row-major, 3 bytes per pixel). Optional
// keyword/value pairs are written as tEXt chunks after IHDR.
std::vector<std::uint8_t> encode(std::size_t width, std::size_t height,
                                 const std::vector<std::uint8_t>& rgb,
                                 const std::vector<std::pair<std::string, std::string>>& text = {});

// Returns the value of the first tEXt chunk with the given keyword.
std::optional<std::string> read_text(const std::vector<std::uint8_t>& png_bytes,
                                     const std::string& keyword);

// Returns a copy of the PNG with the keyword's tEXt chunk replaced (or
// inserted right after IHDR). The image data is untouched.
std::vector<std::uint8_t> with_text(const std::vector<std::uint8_t>& png_bytes,
                                    const std::string& keyword, const std::string& value);

}  // namespace chartalt::png
