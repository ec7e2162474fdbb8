/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/neural/param-io.hpp"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

namespace dqnaf::neural {

namespace {

constexpr char MAGIC[4] = {'D', 'Q', 'A', 'F'};

template<typename T>
void
putLe(std::vector<uint8_t>& buf, T value)
{
  for (size_t i = 0; i < sizeof(T); ++i) {
    buf.push_back(static_cast<uint8_t>(value >> (8 * i)));
  }
}

class Reader
{
public:
  Reader(const std::vector<uint8_t>& buf, size_t end)
    : m_buf(buf)
    , m_end(end)
  {
  }

  template<typename T>
  T
  get()
  {
    if (m_pos + sizeof(T) > m_end) {
      throw CorruptFile("parameter file is truncated");
    }
    T value = 0;
    for (size_t i = 0; i < sizeof(T); ++i) {
      value |= static_cast<T>(m_buf[m_pos + i]) << (8 * i);
    }
    m_pos += sizeof(T);
    return value;
  }

  size_t
  remaining() const
  {
    return m_end - m_pos;
  }

private:
  const std::vector<uint8_t>& m_buf;
  size_t m_end;
  size_t m_pos = sizeof(MAGIC);
};

uint32_t
crc(const uint8_t* data, size_t len)
{
  return static_cast<uint32_t>(::crc32(::crc32(0L, Z_NULL, 0), data, static_cast<uInt>(len)));
}

} // namespace

void
saveParams(const Mlp& net, const std::filesystem::path& path)
{
  std::vector<uint8_t> buf(std::begin(MAGIC), std::end(MAGIC));
  putLe<uint16_t>(buf, PARAM_FORMAT_VERSION);
  putLe<uint32_t>(buf, static_cast<uint32_t>(net.faceCount()));
  putLe<uint32_t>(buf, static_cast<uint32_t>(net.shapes().size()));
  for (const auto& shape : net.shapes()) {
    putLe<uint32_t>(buf, static_cast<uint32_t>(shape.in));
    putLe<uint32_t>(buf, static_cast<uint32_t>(shape.out));
  }
  for (double p : net.params()) {
    putLe<uint64_t>(buf, std::bit_cast<uint64_t>(p));
  }
  putLe<uint32_t>(buf, crc(buf.data(), buf.size()));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

Mlp
loadParams(const std::filesystem::path& path, std::optional<size_t> expectedFaceCount)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw MissingFile("parameter file not found: " + path.string());
  }
  std::vector<uint8_t> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  if (buf.size() < sizeof(MAGIC) + 4 || std::memcmp(buf.data(), MAGIC, sizeof(MAGIC)) != 0) {
    throw CorruptFile("not a parameter file: " + path.string());
  }
  size_t body = buf.size() - 4;
  uint32_t stored = 0;
  for (size_t i = 0; i < 4; ++i) {
    stored |= static_cast<uint32_t>(buf[body + i]) << (8 * i);
  }
  if (stored != crc(buf.data(), body)) {
    throw CorruptFile("checksum mismatch in " + path.string());
  }

  Reader r(buf, body);
  auto version = r.get<uint16_t>();
  if (version != PARAM_FORMAT_VERSION) {
    throw CorruptFile("unsupported parameter format version " + std::to_string(version));
  }
  auto faceCount = r.get<uint32_t>();
  auto layerCount = r.get<uint32_t>();
  if (layerCount == 0 || layerCount > 64) {
    throw CorruptFile("implausible layer count");
  }
  std::vector<LayerShape> shapes;
  size_t total = 0;
  for (uint32_t i = 0; i < layerCount; ++i) {
    LayerShape s;
    s.in = r.get<uint32_t>();
    s.out = r.get<uint32_t>();
    total += s.paramCount();
    shapes.push_back(s);
  }
  if (shapes.back().out != faceCount) {
    throw CorruptFile("output layer does not match face count");
  }
  if (expectedFaceCount && *expectedFaceCount != faceCount) {
    throw ShapeMismatch("parameter file is for " + std::to_string(faceCount) + " faces, expected " +
                        std::to_string(*expectedFaceCount));
  }
  if (r.remaining() != total * 8) {
    throw CorruptFile("parameter payload size does not match layer shapes");
  }
  std::vector<double> params(total);
  for (double& p : params) {
    p = std::bit_cast<double>(r.get<uint64_t>());
  }
  return Mlp(std::move(shapes), std::move(params));
}

} // namespace dqnaf::neural
