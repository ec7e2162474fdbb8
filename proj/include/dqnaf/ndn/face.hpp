/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_NDN_FACE_HPP
#define DQNAF_NDN_FACE_HPP

#include "dqnaf/ndn/packet.hpp"

namespace dqnaf::ndn {

/// Whatever carries packets out of a face; the simulator binds it to a link direction.
class FaceTransport
{
public:
  virtual
  ~FaceTransport() = default;

  virtual void
  send(Packet packet, Time now) = 0;
};

struct Face
{
  FaceId id = 0;
  FaceTransport* transport = nullptr;
  bool up = true;
};

} // namespace dqnaf::ndn

#endif // DQNAF_NDN_FACE_HPP
