#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "fourkin/errors.hpp"

// Minimal TOML subset: [tables], [[arrays of tables]], bare or quoted keys,
// basic strings, integers, floats, booleans, homogeneous arrays (which may
// span lines), # comments. No dates, inline tables, dotted keys or
// multiline strings; scenario files stay within this subset.
namespace fourkin::toml {

class Value {
 public:
  using Array = std::vector<Value>;
  using Table = std::map<std::string, Value>;

  Value() : data_(Table{}) {}
  explicit Value(bool b) : data_(b) {}
  explicit Value(std::int64_t i) : data_(i) {}
  explicit Value(double d) : data_(d) {}
  explicit Value(std::string s) : data_(std::move(s)) {}
  explicit Value(Array a) : data_(std::move(a)) {}
  explicit Value(Table t) : data_(std::move(t)) {}

  bool is_table() const { return std::holds_alternative<Table>(data_); }
  bool is_array() const { return std::holds_alternative<Array>(data_); }
  bool is_string() const { return std::holds_alternative<std::string>(data_); }
  bool is_bool() const { return std::holds_alternative<bool>(data_); }
  bool is_integer() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_number() const {
    return std::holds_alternative<double>(data_) || is_integer();
  }

  bool as_bool() const {
    require(is_bool(), "boolean");
    return std::get<bool>(data_);
  }
  std::int64_t as_integer() const {
    require(is_integer(), "integer");
    return std::get<std::int64_t>(data_);
  }
  double as_double() const {
    if (is_integer()) return static_cast<double>(std::get<std::int64_t>(data_));
    require(std::holds_alternative<double>(data_), "number");
    return std::get<double>(data_);
  }
  const std::string& as_string() const {
    require(is_string(), "string");
    return std::get<std::string>(data_);
  }
  const Array& as_array() const {
    require(is_array(), "array");
    return std::get<Array>(data_);
  }
  const Table& as_table() const {
    require(is_table(), "table");
    return std::get<Table>(data_);
  }
  Table& table() {
    require(is_table(), "table");
    return std::get<Table>(data_);
  }
  Array& array() {
    require(is_array(), "array");
    return std::get<Array>(data_);
  }

  bool contains(const std::string& key) const {
    return is_table() && as_table().count(key) > 0;
  }
  // nullptr when absent; throws only on non-table receivers.
  const Value* find(const std::string& key) const {
    const auto& t = as_table();
    auto it = t.find(key);
    return it == t.end() ? nullptr : &it->second;
  }
  const Value& at(const std::string& key) const {
    const Value* v = find(key);
    if (!v) throw ConfigError("missing key '" + key + "'");
    return *v;
  }

 private:
  void require(bool ok, const char* want) const {
    if (!ok) throw ConfigError(std::string("expected a ") + want);
  }
  std::variant<bool, std::int64_t, double, std::string, Array, Table> data_;
};

namespace detail {

struct Parser {
  std::string text;
  std::size_t pos = 0;
  int line = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("toml parse error at line " + std::to_string(line) + ": " + msg);
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }

  void skip_ws_inline() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
  // Whitespace, comments and newlines; used between statements and inside
  // arrays.
  void skip_filler() {
    while (!done()) {
      char c = peek();
      if (c == ' ' || c == '\t') {
        ++pos;
      } else if (c == '\n' || c == '\r') {
        take();
      } else if (c == '#') {
        while (!done() && peek() != '\n') ++pos;
      } else {
        break;
      }
    }
  }
  void expect_line_end() {
    skip_ws_inline();
    if (done()) return;
    if (peek() == '#') {
      while (!done() && peek() != '\n') ++pos;
    }
    if (done()) return;
    if (peek() == '\r') take();
    if (done()) return;
    if (peek() != '\n') fail("unexpected trailing content");
    take();
  }

  static bool is_bare_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  std::string parse_key() {
    skip_ws_inline();
    if (done()) fail("expected a key");
    if (peek() == '"') return parse_basic_string();
    std::string key;
    while (!done() && is_bare_char(peek())) key.push_back(take());
    if (key.empty()) fail("expected a key");
    return key;
  }

  std::string parse_basic_string() {
    if (take() != '"') fail("expected '\"'");
    std::string out;
    while (true) {
      if (done()) fail("unterminated string");
      char c = take();
      if (c == '"') break;
      if (c == '\n') fail("newline in string");
      if (c == '\\') {
        if (done()) fail("unterminated escape");
        char e = take();
        switch (e) {
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          case 'r': out.push_back('\r'); break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  Value parse_value() {
    skip_ws_inline();
    if (done()) fail("expected a value");
    char c = peek();
    if (c == '"') return Value(parse_basic_string());
    if (c == '[') return parse_array();
    if (c == 't' || c == 'f') return parse_boolean();
    return parse_number();
  }

  Value parse_array() {
    take();  // '['
    Value::Array items;
    skip_filler();
    while (!done() && peek() != ']') {
      items.push_back(parse_value());
      skip_filler();
      if (!done() && peek() == ',') {
        take();
        skip_filler();
      } else {
        break;
      }
    }
    if (done() || peek() != ']') fail("unterminated array");
    take();
    for (std::size_t i = 1; i < items.size(); ++i) {
      if (items[i].is_table() != items[0].is_table() ||
          items[i].is_array() != items[0].is_array() ||
          items[i].is_string() != items[0].is_string() ||
          items[i].is_bool() != items[0].is_bool() ||
          items[i].is_number() != items[0].is_number()) {
        fail("mixed-type array");
      }
    }
    return Value(std::move(items));
  }

  Value parse_boolean() {
    if (text.compare(pos, 4, "true") == 0 && boundary(pos + 4)) {
      pos += 4;
      return Value(true);
    }
    if (text.compare(pos, 5, "false") == 0 && boundary(pos + 5)) {
      pos += 5;
      return Value(false);
    }
    fail("expected a value");
  }

  bool boundary(std::size_t p) const {
    return p >= text.size() || !is_bare_char(text[p]);
  }

  Value parse_number() {
    std::size_t start = pos;
    bool is_float = false;
    if (!done() && (peek() == '+' || peek() == '-')) ++pos;
    while (!done()) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '.' || c == 'e' || c == 'E') {
        is_float = true;
        ++pos;
        if (!done() && (peek() == '+' || peek() == '-')) ++pos;
      } else {
        break;
      }
    }
    if (pos == start) fail("expected a value");
    const std::string tok = text.substr(start, pos - start);
    if (!is_float) {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size()) fail("bad integer '" + tok + "'");
      return Value(v);
    }
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) fail("bad number '" + tok + "'");
      return Value(v);
    } catch (const std::exception&) {
      fail("bad number '" + tok + "'");
    }
  }

  std::vector<std::string> parse_header_path() {
    std::vector<std::string> path;
    while (true) {
      path.push_back(parse_key());
      skip_ws_inline();
      if (!done() && peek() == '.') {
        take();
        continue;
      }
      break;
    }
    return path;
  }

  Value parse_document() {
    Value root;
    Value* current = &root;
    skip_filler();
    while (!done()) {
      if (peek() == '[') {
        take();
        const bool array_of_tables = !done() && peek() == '[';
        if (array_of_tables) take();
        auto path = parse_header_path();
        skip_ws_inline();
        if (done() || take() != ']') fail("expected ']'");
        if (array_of_tables && (done() || take() != ']')) fail("expected ']]'");
        expect_line_end();
        current = descend(root, path, array_of_tables);
      } else {
        std::string key = parse_key();
        skip_ws_inline();
        if (done() || take() != '=') fail("expected '=' after key '" + key + "'");
        Value v = parse_value();
        expect_line_end();
        if (!current->table().emplace(key, std::move(v)).second) {
          fail("duplicate key '" + key + "'");
        }
      }
      skip_filler();
    }
    return root;
  }

  Value* descend(Value& root, const std::vector<std::string>& path, bool array_of_tables) {
    Value* node = &root;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const bool last = i + 1 == path.size();
      auto& tbl = node->table();
      auto it = tbl.find(path[i]);
      if (it == tbl.end()) {
        if (last && array_of_tables) {
          it = tbl.emplace(path[i], Value(Value::Array{})).first;
        } else {
          it = tbl.emplace(path[i], Value(Value::Table{})).first;
        }
      }
      node = &it->second;
      if (node->is_array()) {
        auto& arr = node->array();
        if (last && array_of_tables) {
          arr.emplace_back(Value::Table{});
        } else if (arr.empty() || !arr.back().is_table()) {
          fail("'" + path[i] + "' is not a table");
        }
        node = &arr.back();
      } else if (!node->is_table()) {
        fail("'" + path[i] + "' is not a table");
      } else if (last && array_of_tables) {
        fail("'" + path[i] + "' is already a plain table");
      }
    }
    return node;
  }
};

}  // namespace detail

inline Value parse(const std::string& text) {
  detail::Parser p{text};
  return p.parse_document();
}

inline Value parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace fourkin::toml
