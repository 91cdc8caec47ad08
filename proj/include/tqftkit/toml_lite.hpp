#pragma once

#include <string>
#include <vector>

namespace tqftkit {

// Small TOML subset: bare keys, [table] headers, comments, and values that
// are strings, integers, booleans, or (nested) arrays. Floats are rejected;
// exact data travels as strings like "3/4". Every value remembers its source
// line so schema errors can point back at the document.
struct TomlValue {
  enum class Kind { String, Integer, Boolean, Array };

  Kind kind = Kind::Integer;
  std::string str;
  long long integer = 0;
  bool boolean = false;
  std::vector<TomlValue> array;
  long line = 0;
};

struct TomlEntry {
  std::string key;  // dotted path, table names included: "metric.factors"
  TomlValue value;
  long line = 0;
};

struct TomlDoc {
  std::vector<TomlEntry> entries;  // document order

  const TomlValue* find(const std::string& key) const;
  bool has(const std::string& key) const { return find(key) != nullptr; }
};

// Throws ParseError (with a line number) on malformed input.
TomlDoc parse_toml(const std::string& text);

}  // namespace tqftkit
