/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_NDN_NAME_HPP
#define DQNAF_NDN_NAME_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dqnaf::ndn {

/**
 * Hierarchical content name.
 *
 * Ordering is lexicographic by component, so names are usable as map keys with a
 * deterministic iteration order. The empty name is the root prefix "/".
 */
class Name
{
public:
  Name() = default;

  explicit
  Name(std::vector<std::string> components)
    : m_components(std::move(components))
  {
  }

  /// Parses "/a/b/c"; empty components are skipped, so "/" and "" give the root.
  static Name
  fromUri(std::string_view uri);

  std::string
  toUri() const;

  Name&
  append(std::string component)
  {
    m_components.push_back(std::move(component));
    return *this;
  }

  Name&
  appendNumber(uint64_t n)
  {
    return append(std::to_string(n));
  }

  Name
  getPrefix(size_t n) const;

  bool
  isPrefixOf(const Name& other) const;

  size_t
  size() const
  {
    return m_components.size();
  }

  bool
  empty() const
  {
    return m_components.empty();
  }

  const std::string&
  at(size_t i) const
  {
    return m_components.at(i);
  }

  friend auto operator<=>(const Name&, const Name&) = default;
  friend bool operator==(const Name&, const Name&) = default;

private:
  std::vector<std::string> m_components;
};

std::ostream&
operator<<(std::ostream& os, const Name& name);

} // namespace dqnaf::ndn

#endif // DQNAF_NDN_NAME_HPP
