#include "schemaforge/json_value.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace schemaforge {

namespace {

constexpr int kMaxDepth = 128;
constexpr long long kExpSaturation = 1LL << 60;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

// ---------------------------------------------------------------------------
// JsonNumber

std::optional<JsonNumber> JsonNumber::from_lexeme(std::string lexeme) {
  const std::string& s = lexeme;
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && s[i] == '-') {
    negative = true;
    ++i;
  }
  // integer part: 0 | [1-9][0-9]*
  std::size_t int_begin = i;
  if (i >= s.size() || !is_digit(s[i])) return std::nullopt;
  if (s[i] == '0') {
    ++i;
  } else {
    while (i < s.size() && is_digit(s[i])) ++i;
  }
  std::size_t int_end = i;
  // fraction
  std::size_t frac_begin = 0, frac_end = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    frac_begin = i;
    if (i >= s.size() || !is_digit(s[i])) return std::nullopt;
    while (i < s.size() && is_digit(s[i])) ++i;
    frac_end = i;
  }
  // exponent
  long long exp_value = 0;
  bool exp_negative = false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      exp_negative = (s[i] == '-');
      ++i;
    }
    if (i >= s.size() || !is_digit(s[i])) return std::nullopt;
    while (i < s.size() && is_digit(s[i])) {
      if (exp_value < kExpSaturation) exp_value = exp_value * 10 + (s[i] - '0');
      ++i;
    }
    if (exp_value > kExpSaturation) exp_value = kExpSaturation;
    if (exp_negative) exp_value = -exp_value;
  }
  if (i != s.size()) return std::nullopt;

  // Normalize: value = digits * 10^exp10 with digits free of leading and
  // trailing zeros.
  std::string full = s.substr(int_begin, int_end - int_begin);
  std::size_t frac_len = frac_end - frac_begin;
  full += s.substr(frac_begin, frac_len);

  std::size_t first = full.find_first_not_of('0');
  JsonNumber n;
  n.lexeme_ = std::move(lexeme);
  if (first == std::string::npos) {
    n.negative_ = false;
    n.digits_.clear();
    n.exp10_ = 0;
    return n;
  }
  std::size_t last = full.find_last_not_of('0');
  n.negative_ = negative;
  n.digits_ = full.substr(first, last - first + 1);
  n.exp10_ = exp_value - static_cast<long long>(frac_len) +
             static_cast<long long>(full.size() - 1 - last);
  return n;
}

JsonNumber JsonNumber::from_int(std::int64_t v) {
  auto n = from_lexeme(std::to_string(v));
  return *n;
}

JsonNumber JsonNumber::from_double(double v) {
  if (!(v == v) || v > std::numeric_limits<double>::max() ||
      v < std::numeric_limits<double>::lowest()) {
    throw std::invalid_argument("JSON numbers must be finite");
  }
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  auto n = from_lexeme(std::string(buf.data(), res.ptr));
  return *n;
}

double JsonNumber::to_double() const {
  double out = 0.0;
  std::from_chars(lexeme_.data(), lexeme_.data() + lexeme_.size(), out);
  return out;
}

std::optional<std::int64_t> JsonNumber::to_int64() const {
  if (digits_.empty()) return 0;
  if (exp10_ < 0 || exp10_ > 18) return std::nullopt;
  // digits * 10^exp10, overflow-checked
  std::int64_t magnitude = 0;
  for (char c : digits_) {
    if (magnitude > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10) {
      return std::nullopt;
    }
    magnitude = magnitude * 10 + (c - '0');
  }
  for (long long k = 0; k < exp10_; ++k) {
    if (magnitude > std::numeric_limits<std::int64_t>::max() / 10) return std::nullopt;
    magnitude *= 10;
  }
  if (negative_) {
    return -magnitude;  // |INT64_MIN| overflows the positive pass; acceptable loss
  }
  return magnitude;
}

// ---------------------------------------------------------------------------
// JsonValue::Object

const JsonValue* JsonValue::Object::find(std::string_view key) const {
  for (const auto& [k, v] : members_) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool JsonValue::Object::insert(std::string key, JsonValue value) {
  if (contains(key)) return false;
  members_.emplace_back(std::move(key), std::move(value));
  return true;
}

JsonValue& JsonValue::Object::operator[](std::string key) {
  for (auto& [k, v] : members_) {
    if (k == key) return v;
  }
  members_.emplace_back(std::move(key), JsonValue());
  return members_.back().second;
}

std::size_t JsonValue::length() const {
  if (is_object()) return as_object().size();
  if (is_array()) return as_array().size();
  return 1;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  ParseError err;

  bool fail(std::size_t at, std::string reason) {
    err.offset = at;
    err.reason = std::move(reason);
    return false;
  }

  void skip_ws() {
    while (pos < s.size() &&
           (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r')) {
      ++pos;
    }
  }

  bool parse_value(JsonValue& out, int depth) {
    if (pos >= s.size()) return fail(pos, "unexpected end of input");
    switch (s[pos]) {
      case '{':
        return parse_object(out, depth);
      case '[':
        return parse_array(out, depth);
      case '"': {
        std::string str;
        if (!parse_string(str)) return false;
        out = JsonValue(std::move(str));
        return true;
      }
      case 't':
        if (!expect_literal("true")) return false;
        out = JsonValue(true);
        return true;
      case 'f':
        if (!expect_literal("false")) return false;
        out = JsonValue(false);
        return true;
      case 'n':
        if (!expect_literal("null")) return false;
        out = JsonValue(nullptr);
        return true;
      default:
        if (s[pos] == '-' || is_digit(s[pos])) return parse_number(out);
        return fail(pos, "unexpected character");
    }
  }

  bool expect_literal(std::string_view lit) {
    if (s.substr(pos, lit.size()) != lit) return fail(pos, "invalid literal");
    pos += lit.size();
    return true;
  }

  bool parse_object(JsonValue& out, int depth) {
    const std::size_t open = pos;
    if (depth > kMaxDepth) return fail(open, "nesting depth exceeds 128");
    ++pos;  // '{'
    JsonValue::Object obj;
    skip_ws();
    if (pos < s.size() && s[pos] == '}') {
      ++pos;
      out = JsonValue(std::move(obj));
      return true;
    }
    while (true) {
      skip_ws();
      if (pos >= s.size() || s[pos] != '"') {
        return fail(pos, "expected object key string");
      }
      const std::size_t key_at = pos;
      std::string key;
      if (!parse_string(key)) return false;
      skip_ws();
      if (pos >= s.size() || s[pos] != ':') return fail(pos, "expected ':'");
      ++pos;
      skip_ws();
      JsonValue value;
      if (!parse_value(value, depth + 1)) return false;
      if (!obj.insert(std::move(key), std::move(value))) {
        return fail(key_at, "duplicate object key");
      }
      skip_ws();
      if (pos >= s.size()) return fail(pos, "unterminated object");
      if (s[pos] == ',') {
        ++pos;
        skip_ws();
        if (pos < s.size() && s[pos] == '}') return fail(pos, "trailing comma in object");
        continue;
      }
      if (s[pos] == '}') {
        ++pos;
        out = JsonValue(std::move(obj));
        return true;
      }
      return fail(pos, "expected ',' or '}'");
    }
  }

  bool parse_array(JsonValue& out, int depth) {
    const std::size_t open = pos;
    if (depth > kMaxDepth) return fail(open, "nesting depth exceeds 128");
    ++pos;  // '['
    JsonValue::Array arr;
    skip_ws();
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
      out = JsonValue(std::move(arr));
      return true;
    }
    while (true) {
      skip_ws();
      JsonValue value;
      if (!parse_value(value, depth + 1)) return false;
      arr.push_back(std::move(value));
      skip_ws();
      if (pos >= s.size()) return fail(pos, "unterminated array");
      if (s[pos] == ',') {
        ++pos;
        skip_ws();
        if (pos < s.size() && s[pos] == ']') return fail(pos, "trailing comma in array");
        continue;
      }
      if (s[pos] == ']') {
        ++pos;
        out = JsonValue(std::move(arr));
        return true;
      }
      return fail(pos, "expected ',' or ']'");
    }
  }

  bool parse_number(JsonValue& out) {
    const std::size_t start = pos;
    if (s[pos] == '-') ++pos;
    if (pos >= s.size() || !is_digit(s[pos])) return fail(start, "invalid number");
    if (s[pos] == '0') {
      ++pos;
    } else {
      while (pos < s.size() && is_digit(s[pos])) ++pos;
    }
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      if (pos >= s.size() || !is_digit(s[pos])) return fail(start, "invalid number");
      while (pos < s.size() && is_digit(s[pos])) ++pos;
    }
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      ++pos;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
      if (pos >= s.size() || !is_digit(s[pos])) return fail(start, "invalid number");
      while (pos < s.size() && is_digit(s[pos])) ++pos;
    }
    auto n = JsonNumber::from_lexeme(std::string(s.substr(start, pos - start)));
    if (!n) return fail(start, "invalid number");
    out = JsonValue(std::move(*n));
    return true;
  }

  bool append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return true;
  }

  bool parse_hex4(std::uint32_t& out) {
    if (pos + 4 > s.size()) return fail(pos, "truncated \\u escape");
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) {
      char c = s[pos + k];
      v <<= 4;
      if (c >= '0' && c <= '9') {
        v |= static_cast<std::uint32_t>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        v |= static_cast<std::uint32_t>(c - 'a' + 10);
      } else if (c >= 'A' && c <= 'F') {
        v |= static_cast<std::uint32_t>(c - 'A' + 10);
      } else {
        return fail(pos + k, "invalid hex digit in \\u escape");
      }
    }
    pos += 4;
    out = v;
    return true;
  }

  // Validates one UTF-8 sequence starting at pos and copies it to out.
  bool copy_utf8_sequence(std::string& out) {
    const std::size_t at = pos;
    const unsigned char c0 = static_cast<unsigned char>(s[pos]);
    int len;
    std::uint32_t cp;
    if (c0 >= 0xC2 && c0 <= 0xDF) {
      len = 2;
      cp = c0 & 0x1Fu;
    } else if (c0 >= 0xE0 && c0 <= 0xEF) {
      len = 3;
      cp = c0 & 0x0Fu;
    } else if (c0 >= 0xF0 && c0 <= 0xF4) {
      len = 4;
      cp = c0 & 0x07u;
    } else {
      return fail(at, "invalid UTF-8 byte in string");
    }
    if (pos + static_cast<std::size_t>(len) > s.size()) {
      return fail(at, "truncated UTF-8 sequence in string");
    }
    for (int k = 1; k < len; ++k) {
      const unsigned char c = static_cast<unsigned char>(s[pos + k]);
      if ((c & 0xC0u) != 0x80u) return fail(at, "invalid UTF-8 continuation byte");
      cp = (cp << 6) | (c & 0x3Fu);
    }
    // overlongs, surrogates, and values beyond U+10FFFF
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      return fail(at, "invalid UTF-8 sequence in string");
    }
    out.append(s.substr(pos, static_cast<std::size_t>(len)));
    pos += static_cast<std::size_t>(len);
    return true;
  }

  bool parse_string(std::string& out) {
    ++pos;  // opening quote
    out.clear();
    while (true) {
      if (pos >= s.size()) return fail(pos, "unterminated string");
      const unsigned char c = static_cast<unsigned char>(s[pos]);
      if (c == '"') {
        ++pos;
        return true;
      }
      if (c == '\\') {
        ++pos;
        if (pos >= s.size()) return fail(pos, "unterminated escape");
        const char e = s[pos];
        ++pos;
        switch (e) {
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          case '/': out.push_back('/'); break;
          case 'b': out.push_back('\b'); break;
          case 'f': out.push_back('\f'); break;
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case 't': out.push_back('\t'); break;
          case 'u': {
            const std::size_t esc_at = pos - 2;
            std::uint32_t cp;
            if (!parse_hex4(cp)) return false;
            if (cp >= 0xDC00 && cp <= 0xDFFF) {
              return fail(esc_at, "unpaired low surrogate");
            }
            if (cp >= 0xD800 && cp <= 0xDBFF) {
              if (pos + 2 > s.size() || s[pos] != '\\' || s[pos + 1] != 'u') {
                return fail(esc_at, "unpaired high surrogate");
              }
              pos += 2;
              std::uint32_t lo;
              if (!parse_hex4(lo)) return false;
              if (lo < 0xDC00 || lo > 0xDFFF) {
                return fail(esc_at, "invalid surrogate pair");
              }
              cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
            }
            append_utf8(out, cp);
            break;
          }
          default:
            return fail(pos - 1, "invalid escape character");
        }
        continue;
      }
      if (c < 0x20) return fail(pos, "unescaped control character in string");
      if (c < 0x80) {
        out.push_back(static_cast<char>(c));
        ++pos;
        continue;
      }
      if (!copy_utf8_sequence(out)) return false;
    }
  }
};

}  // namespace

std::optional<JsonValue> parse_json(std::string_view text, ParseError* error) {
  Parser p{text};
  p.skip_ws();
  JsonValue v;
  if (p.pos >= text.size()) {
    if (error) *error = {p.pos, "empty input"};
    return std::nullopt;
  }
  if (!p.parse_value(v, 1)) {
    if (error) *error = p.err;
    return std::nullopt;
  }
  p.skip_ws();
  if (p.pos != text.size()) {
    if (error) *error = {p.pos, "trailing content after JSON document"};
    return std::nullopt;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Serializer

namespace {

void write_escaped(std::string& out, std::string_view sv) {
  out.push_back('"');
  for (unsigned char c : sv) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

void write_value(std::string& out, const JsonValue& v, bool pretty, int indent) {
  const auto pad = [&](int n) { out.append(static_cast<std::size_t>(n), ' '); };
  if (v.is_null()) {
    out += "null";
  } else if (v.is_bool()) {
    out += v.as_bool() ? "true" : "false";
  } else if (v.is_number()) {
    out += v.as_number().lexeme();
  } else if (v.is_string()) {
    write_escaped(out, v.as_string());
  } else if (v.is_array()) {
    const auto& arr = v.as_array();
    if (arr.empty()) {
      out += "[]";
      return;
    }
    out.push_back('[');
    bool first = true;
    for (const auto& el : arr) {
      if (!first) out.push_back(',');
      first = false;
      if (pretty) {
        out.push_back('\n');
        pad(indent + 2);
      }
      write_value(out, el, pretty, indent + 2);
    }
    if (pretty) {
      out.push_back('\n');
      pad(indent);
    }
    out.push_back(']');
  } else {
    const auto& obj = v.as_object();
    if (obj.empty()) {
      out += "{}";
      return;
    }
    out.push_back('{');
    bool first = true;
    for (const auto& [key, member] : obj) {
      if (!first) out.push_back(',');
      first = false;
      if (pretty) {
        out.push_back('\n');
        pad(indent + 2);
      }
      write_escaped(out, key);
      out += pretty ? ": " : ":";
      write_value(out, member, pretty, indent + 2);
    }
    if (pretty) {
      out.push_back('\n');
      pad(indent);
    }
    out.push_back('}');
  }
}

}  // namespace

std::string serialize(const JsonValue& v, JsonStyle style) {
  std::string out;
  write_value(out, v, style == JsonStyle::Pretty, 0);
  return out;
}

}  // namespace schemaforge
