/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/harness/config-file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace dqnaf::harness {

namespace {

std::string
trim(const std::string& s)
{
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool
isKeyChar(char c)
{
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

bool
isValidKey(const std::string& key)
{
  if (key.empty()) {
    return false;
  }
  for (char c : key) {
    if (!isKeyChar(c)) {
      return false;
    }
  }
  return true;
}

/// Strips a trailing comment outside quotes.
std::string
stripComment(const std::string& line, size_t lineNo)
{
  bool inQuotes = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') {
      inQuotes = !inQuotes;
    }
    else if (line[i] == '#' && !inQuotes) {
      return line.substr(0, i);
    }
  }
  if (inQuotes) {
    throw ParseError(lineNo, "unterminated string");
  }
  return line;
}

std::string
parseValue(const std::string& raw, size_t lineNo)
{
  if (raw.empty()) {
    throw ParseError(lineNo, "missing value");
  }
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"') {
      throw ParseError(lineNo, "malformed quoted string");
    }
    return raw.substr(1, raw.size() - 2);
  }
  if (raw.find_first_of(" \t\"") != std::string::npos) {
    throw ParseError(lineNo, "unquoted value contains whitespace: " + raw);
  }
  return raw;
}

} // namespace

std::vector<ConfigTable>
parseConfigText(const std::string& text)
{
  std::vector<ConfigTable> tables(1);
  std::set<std::string> plainTables;
  std::istringstream in(text);
  std::string rawLine;
  size_t lineNo = 0;

  while (std::getline(in, rawLine)) {
    ++lineNo;
    std::string line = trim(stripComment(rawLine, lineNo));
    if (line.empty()) {
      continue;
    }

    if (line.front() == '[') {
      bool isArray = line.starts_with("[[");
      size_t open = isArray ? 2 : 1;
      if (line.size() < 2 * open + 1 || line.substr(line.size() - open) != std::string(open, ']')) {
        throw ParseError(lineNo, "malformed table header");
      }
      std::string name = trim(line.substr(open, line.size() - 2 * open));
      if (!isValidKey(name)) {
        throw ParseError(lineNo, "invalid table name '" + name + "'");
      }
      if (!isArray && !plainTables.insert(name).second) {
        throw ParseError(lineNo, "duplicate table [" + name + "]");
      }
      tables.push_back(ConfigTable{name, isArray, lineNo, {}});
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(lineNo, "expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    if (!isValidKey(key)) {
      throw ParseError(lineNo, "invalid key '" + key + "'");
    }
    std::string value = parseValue(trim(line.substr(eq + 1)), lineNo);
    auto& values = tables.back().values;
    if (!values.emplace(key, ConfigValue{value, lineNo}).second) {
      throw ParseError(lineNo, "duplicate key '" + key + "'");
    }
  }
  return tables;
}

std::vector<ConfigTable>
parseConfigFile(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) {
    throw MissingFile("cannot read scenario file " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parseConfigText(buf.str());
}

} // namespace dqnaf::harness
