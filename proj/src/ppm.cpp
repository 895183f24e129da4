#include "offside/ppm.hpp"

#include <cstring>
#include <fstream>
#include <string>

namespace offside {

namespace {

struct Cursor {
  const std::vector<std::uint8_t>& data;
  std::size_t pos = 0;

  bool eof() const { return pos >= data.size(); }
  std::uint8_t peek() const { return data[pos]; }
};

bool is_ws(std::uint8_t c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// Whitespace and '#' comment runs between header tokens.
void skip_separators(Cursor& c) {
  while (!c.eof()) {
    if (is_ws(c.peek())) {
      ++c.pos;
    } else if (c.peek() == '#') {
      while (!c.eof() && c.peek() != '\n') ++c.pos;
    } else {
      break;
    }
  }
}

long parse_int(Cursor& c) {
  skip_separators(c);
  if (c.eof() || c.peek() < '0' || c.peek() > '9')
    throw std::runtime_error("malformed header");
  long v = 0;
  while (!c.eof() && c.peek() >= '0' && c.peek() <= '9') {
    v = v * 10 + (c.peek() - '0');
    if (v > 1'000'000'000L) throw std::runtime_error("malformed header");
    ++c.pos;
  }
  return v;
}

}  // namespace

Image decode_ppm(const std::vector<std::uint8_t>& bytes) {
  Cursor c{bytes};
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6')
    throw std::runtime_error("malformed header");
  c.pos = 2;

  const long w = parse_int(c);
  const long h = parse_int(c);
  const long maxval = parse_int(c);
  if (w < 1 || h < 1) throw std::runtime_error("malformed header");
  if (maxval != 255) throw std::runtime_error("unsupported maxval");

  // Exactly one whitespace byte separates the header from the payload.
  if (c.eof() || !is_ws(c.peek())) throw std::runtime_error("malformed header");
  ++c.pos;

  const std::size_t need = static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3;
  if (bytes.size() - c.pos < need) throw std::runtime_error("truncated payload");

  Image img(static_cast<int>(w), static_cast<int>(h));
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    img.pixels[i] = {bytes[c.pos + 3 * i], bytes[c.pos + 3 * i + 1], bytes[c.pos + 3 * i + 2]};
  }
  return img;
}

std::vector<std::uint8_t> encode_ppm(const Image& img) {
  const std::string header =
      "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + img.pixels.size() * 3);
  out.insert(out.end(), header.begin(), header.end());
  for (const PixelRGB& p : img.pixels) {
    out.push_back(p.r);
    out.push_back(p.g);
    out.push_back(p.b);
  }
  return out;
}

Image load_ppm(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file: " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  return decode_ppm(bytes);
}

void save_ppm(const std::filesystem::path& path, const Image& img) {
  const auto bytes = encode_ppm(img);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open file for writing: " + path.string());
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

Image mask_to_image(const BinaryMask& m) {
  Image img(m.width, m.height);
  for (std::size_t i = 0; i < m.bits.size(); ++i) {
    const std::uint8_t v = m.bits[i] ? 255 : 0;
    img.pixels[i] = {v, v, v};
  }
  return img;
}

}  // namespace offside
