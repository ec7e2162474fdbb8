/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_HARNESS_CONFIG_FILE_HPP
#define DQNAF_HARNESS_CONFIG_FILE_HPP

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqnaf::harness {

class ScenarioError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ScenarioError
{
public:
  ParseError(size_t line, const std::string& what)
    : ScenarioError("line " + std::to_string(line) + ": " + what)
    , m_line(line)
  {
  }

  size_t
  line() const
  {
    return m_line;
  }

private:
  size_t m_line;
};

class ValidationError : public ScenarioError
{
public:
  ValidationError(std::string field, const std::string& what)
    : ScenarioError(field + ": " + what)
    , m_field(std::move(field))
  {
  }

  const std::string&
  field() const
  {
    return m_field;
  }

private:
  std::string m_field;
};

class MissingFile : public ScenarioError
{
public:
  using ScenarioError::ScenarioError;
};

struct ConfigValue
{
  std::string text;
  size_t line = 0;
};

/**
 * One table of a key/value file: `[name]` opens a table, `[[name]]` appends an
 * element to an array of tables. Keys before the first header belong to the
 * root table, whose name is empty.
 */
struct ConfigTable
{
  std::string name;
  bool isArrayElement = false;
  size_t line = 0;
  std::map<std::string, ConfigValue> values;
};

/**
 * Parses the line-oriented scenario syntax:
 *
 *     # comment
 *     key = value          value: bare token, or "quoted string"
 *     [table]
 *     [[array-element]]
 *
 * Duplicate keys within a table and duplicate plain tables are errors.
 */
std::vector<ConfigTable>
parseConfigText(const std::string& text);

std::vector<ConfigTable>
parseConfigFile(const std::filesystem::path& path);

} // namespace dqnaf::harness

#endif // DQNAF_HARNESS_CONFIG_FILE_HPP
