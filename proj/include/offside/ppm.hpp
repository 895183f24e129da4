#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "offside/image.hpp"

namespace offside {

// Binary PPM (P6) decoder. '#' comments are skipped anywhere in the header;
// maxval must be 255. Throws std::runtime_error with one of:
// "malformed header", "unsupported maxval", "truncated payload".
Image decode_ppm(const std::vector<std::uint8_t>& bytes);

// P6 encoder: "P6\n<w> <h>\n255\n" followed by the raw payload.
// decode_ppm(encode_ppm(img)) == img bit-exactly.
std::vector<std::uint8_t> encode_ppm(const Image& img);

Image load_ppm(const std::filesystem::path& path);
void save_ppm(const std::filesystem::path& path, const Image& img);

// Black/white rendering of a mask, used by the --dump-masks debug output.
Image mask_to_image(const BinaryMask& m);

}  // namespace offside
