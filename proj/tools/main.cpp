/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/harness/cli.hpp"

int
main(int argc, char** argv)
{
  return dqnaf::harness::runCli(argc, argv);
}
