/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/ndn/packet.hpp"

namespace dqnaf::ndn {

uint64_t
wireSizeBits(const Packet& packet)
{
  uint64_t bytes = HEADER_BYTES;
  if (const auto* data = std::get_if<Data>(&packet)) {
    bytes += data->payloadSize;
  }
  return bytes * 8;
}

} // namespace dqnaf::ndn
