/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_NDN_PACKET_HPP
#define DQNAF_NDN_PACKET_HPP

#include "dqnaf/common/time.hpp"
#include "dqnaf/ndn/name.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace dqnaf::ndn {

using FaceId = uint32_t;
using NodeId = uint32_t;

/// Face id used for packets originated or consumed inside the node itself.
constexpr FaceId INTERNAL_FACE = 0;

/// Fixed per-packet header overhead; interests carry no payload.
constexpr uint32_t HEADER_BYTES = 64;

struct Interest
{
  Name name;
  uint64_t nonce = 0;
  Duration lifetime{0};
  std::vector<NodeId> hopTrace;
};

/// Per-hop annotation written into Data by the DQ-Learning strategy only.
struct DqAnnotation
{
  double bestQ = 0.0; ///< milliseconds
  Time sendTime{0};

  friend bool operator==(const DqAnnotation&, const DqAnnotation&) = default;
};

struct Data
{
  Name name;
  uint32_t payloadSize = 0;
  std::optional<DqAnnotation> dqAnnotation;

  friend bool operator==(const Data&, const Data&) = default;
};

enum class NackReason {
  NO_ROUTE,
  CONGESTION,
  LINK_DOWN,
};

struct Nack
{
  Name name;
  uint64_t nonce = 0;
  NackReason reason = NackReason::NO_ROUTE;
};

using Packet = std::variant<Interest, Data, Nack>;

/// Size on the wire in bits: header plus payload.
uint64_t
wireSizeBits(const Packet& packet);

} // namespace dqnaf::ndn

#endif // DQNAF_NDN_PACKET_HPP
