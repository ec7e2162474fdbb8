/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_HARNESS_CLI_HPP
#define DQNAF_HARNESS_CLI_HPP

namespace dqnaf::harness {

enum ExitCode {
  EXIT_OK = 0,
  EXIT_VALIDATION = 1,
  EXIT_RUNTIME = 2,
};

/// Entry point of the dqnaf command line tool; returns the process exit code.
int
runCli(int argc, char** argv);

} // namespace dqnaf::harness

#endif // DQNAF_HARNESS_CLI_HPP
