/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/ndn/name.hpp"

#include <algorithm>
#include <ostream>

namespace dqnaf::ndn {

Name
Name::fromUri(std::string_view uri)
{
  std::vector<std::string> components;
  size_t pos = 0;
  while (pos <= uri.size()) {
    size_t next = uri.find('/', pos);
    if (next == std::string_view::npos) {
      next = uri.size();
    }
    if (next > pos) {
      components.emplace_back(uri.substr(pos, next - pos));
    }
    pos = next + 1;
  }
  return Name(std::move(components));
}

std::string
Name::toUri() const
{
  if (m_components.empty()) {
    return "/";
  }
  std::string uri;
  for (const auto& c : m_components) {
    uri += '/';
    uri += c;
  }
  return uri;
}

Name
Name::getPrefix(size_t n) const
{
  n = std::min(n, m_components.size());
  return Name(std::vector<std::string>(m_components.begin(), m_components.begin() + n));
}

bool
Name::isPrefixOf(const Name& other) const
{
  if (m_components.size() > other.m_components.size()) {
    return false;
  }
  return std::equal(m_components.begin(), m_components.end(), other.m_components.begin());
}

std::ostream&
operator<<(std::ostream& os, const Name& name)
{
  return os << name.toUri();
}

} // namespace dqnaf::ndn
