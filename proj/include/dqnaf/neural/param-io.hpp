/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_NEURAL_PARAM_IO_HPP
#define DQNAF_NEURAL_PARAM_IO_HPP

#include "dqnaf/neural/mlp.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>

namespace dqnaf::neural {

class MissingFile : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class CorruptFile : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/**
 * Parameter file layout, all integers and floats little-endian:
 *
 *   "DQAF" | u16 version | u32 face count | u32 layer count
 *   | per layer: u32 in, u32 out
 *   | f64 parameters in Mlp order
 *   | u32 CRC-32 of every preceding byte
 */
constexpr uint16_t PARAM_FORMAT_VERSION = 1;

void
saveParams(const Mlp& net, const std::filesystem::path& path);

/// Throws ShapeMismatch when expectedFaceCount is given and differs from the file.
Mlp
loadParams(const std::filesystem::path& path, std::optional<size_t> expectedFaceCount = std::nullopt);

} // namespace dqnaf::neural

#endif // DQNAF_NEURAL_PARAM_IO_HPP
