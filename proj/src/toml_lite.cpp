#include "tqftkit/toml_lite.hpp"

#include <cctype>

#include "tqftkit/error.hpp"

namespace tqftkit {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  long line = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }

  [[noreturn]] void fail_here(const std::string& what) const {
    fail("ParseError", what + " at line " + std::to_string(line));
  }

  // Whitespace and comments; newlines only when `newlines` is set.
  void skip(bool newlines) {
    while (!done()) {
      char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        take();
      } else {
        return;
      }
    }
  }
};

bool is_bare_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

std::string parse_bare_key(Cursor& cur) {
  std::string key;
  while (!cur.done() && is_bare_key_char(cur.peek())) key.push_back(cur.take());
  if (key.empty()) cur.fail_here("expected a key");
  return key;
}

TomlValue parse_value(Cursor& cur);

bool text_matches(const Cursor& cur, const char* word) {
  std::size_t n = std::char_traits<char>::length(word);
  if (cur.text.compare(cur.pos, n, word) != 0) return false;
  std::size_t end = cur.pos + n;
  return end >= cur.text.size() || !is_bare_key_char(cur.text[end]);
}

TomlValue parse_string(Cursor& cur) {
  TomlValue v;
  v.kind = TomlValue::Kind::String;
  v.line = cur.line;
  cur.take();  // opening quote
  while (true) {
    if (cur.done() || cur.peek() == '\n') cur.fail_here("unterminated string");
    char c = cur.take();
    if (c == '"') break;
    if (c == '\\') {
      if (cur.done()) cur.fail_here("unterminated string");
      char e = cur.take();
      if (e == '"' || e == '\\')
        v.str.push_back(e);
      else
        cur.fail_here("unsupported escape");
    } else {
      v.str.push_back(c);
    }
  }
  return v;
}

TomlValue parse_number(Cursor& cur) {
  TomlValue v;
  v.kind = TomlValue::Kind::Integer;
  v.line = cur.line;
  std::string digits;
  if (cur.peek() == '+' || cur.peek() == '-') digits.push_back(cur.take());
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
    digits.push_back(cur.take());
  if (digits.empty() || digits.back() == '+' || digits.back() == '-')
    cur.fail_here("expected an integer");
  if (!cur.done() && (cur.peek() == '.' || cur.peek() == 'e' || cur.peek() == 'E'))
    cur.fail_here("floats are not supported; write exact values as strings");
  try {
    v.integer = std::stoll(digits);
  } catch (const std::exception&) {
    cur.fail_here("integer out of range");
  }
  return v;
}

TomlValue parse_array(Cursor& cur) {
  TomlValue v;
  v.kind = TomlValue::Kind::Array;
  v.line = cur.line;
  cur.take();  // '['
  while (true) {
    cur.skip(true);
    if (cur.done()) cur.fail_here("unterminated array");
    if (cur.peek() == ']') {
      cur.take();
      return v;
    }
    v.array.push_back(parse_value(cur));
    cur.skip(true);
    if (cur.done()) cur.fail_here("unterminated array");
    if (cur.peek() == ',') {
      cur.take();
    } else if (cur.peek() != ']') {
      cur.fail_here("expected ',' or ']' in array");
    }
  }
}

TomlValue parse_value(Cursor& cur) {
  cur.skip(false);
  if (cur.done() || cur.peek() == '\n') cur.fail_here("expected a value");
  char c = cur.peek();
  if (c == '"') return parse_string(cur);
  if (c == '[') return parse_array(cur);
  if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
    return parse_number(cur);
  if (text_matches(cur, "true") || text_matches(cur, "false")) {
    TomlValue v;
    v.kind = TomlValue::Kind::Boolean;
    v.line = cur.line;
    v.boolean = cur.peek() == 't';
    for (int i = 0; i < (v.boolean ? 4 : 5); ++i) cur.take();
    return v;
  }
  cur.fail_here("unrecognized value");
}

}  // namespace

const TomlValue* TomlDoc::find(const std::string& key) const {
  for (const TomlEntry& e : entries)
    if (e.key == key) return &e.value;
  return nullptr;
}

TomlDoc parse_toml(const std::string& text) {
  TomlDoc doc;
  Cursor cur{text};
  std::string table;
  while (true) {
    cur.skip(true);
    if (cur.done()) return doc;
    if (cur.peek() == '[') {
      cur.take();
      cur.skip(false);
      table = parse_bare_key(cur);
      cur.skip(false);
      if (cur.done() || cur.peek() != ']') cur.fail_here("expected ']'");
      cur.take();
      cur.skip(false);
      if (!cur.done() && cur.peek() != '\n') cur.fail_here("junk after table header");
      continue;
    }
    TomlEntry entry;
    entry.line = cur.line;
    std::string key = parse_bare_key(cur);
    entry.key = table.empty() ? key : table + "." + key;
    cur.skip(false);
    if (cur.done() || cur.peek() != '=') cur.fail_here("expected '='");
    cur.take();
    cur.skip(false);
    entry.value = parse_value(cur);
    cur.skip(false);
    if (!cur.done() && cur.peek() != '\n') cur.fail_here("junk after value");
    require(doc.find(entry.key) == nullptr, "ParseError",
            "duplicate key '" + entry.key + "' at line " + std::to_string(entry.line));
    doc.entries.push_back(std::move(entry));
  }
}

}  // namespace tqftkit
