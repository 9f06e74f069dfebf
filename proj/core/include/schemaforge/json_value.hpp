#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace schemaforge {

/// JSON number with decimal value semantics.
///
/// The textual lexeme is kept verbatim so serialization round-trips exactly,
/// and a normalized decimal form (sign, digits, power of ten) is derived for
/// comparisons. Equality is by numeric value: 1, 1.0 and 1e0 are all equal,
/// at any precision or magnitude.
class JsonNumber {
 public:
  JsonNumber() : lexeme_("0") {}  // members already hold the canonical zero

  /// Validates `lexeme` against the JSON number grammar. Returns nullopt on
  /// any deviation (leading zeros, bare dot, missing exponent digits, ...).
  static std::optional<JsonNumber> from_lexeme(std::string lexeme);

  static JsonNumber from_int(std::int64_t v);

  /// Shortest round-trip decimal form of a finite double.
  /// Throws std::invalid_argument for NaN or infinity.
  static JsonNumber from_double(double v);

  const std::string& lexeme() const { return lexeme_; }

  /// Nearest double (may lose precision for long or huge decimals).
  double to_double() const;

  /// Exact value when the number is an integer that fits in int64.
  std::optional<std::int64_t> to_int64() const;

  bool operator==(const JsonNumber& o) const {
    return negative_ == o.negative_ && exp10_ == o.exp10_ && digits_ == o.digits_;
  }

 private:
  std::string lexeme_;
  // value = (negative ? -1 : 1) * digits * 10^exp10, where digits is a
  // decimal integer string with no leading or trailing zeros. Zero is the
  // canonical triple (false, "", 0); -0 compares equal to 0.
  bool negative_ = false;
  std::string digits_;
  long long exp10_ = 0;
};

/// In-memory JSON document: null, boolean, number, string, array, or object.
/// Object members keep insertion order and have unique keys. Values are
/// immutable in practice once built (all library operations are pure).
class JsonValue {
 public:
  using Array = std::vector<JsonValue>;

  /// Insertion-ordered string-keyed map with unique keys.
  class Object {
   public:
    using Member = std::pair<std::string, JsonValue>;
    using const_iterator = std::vector<Member>::const_iterator;

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const_iterator begin() const { return members_.begin(); }
    const_iterator end() const { return members_.end(); }

    bool contains(std::string_view key) const { return find(key) != nullptr; }
    const JsonValue* find(std::string_view key) const;

    /// Inserts a new member; returns false (and leaves the object unchanged)
    /// if the key is already present.
    bool insert(std::string key, JsonValue value);

    /// Insert-or-assign access.
    JsonValue& operator[](std::string key);

   private:
    std::vector<Member> members_;
  };

  JsonValue() : v_(nullptr) {}
  JsonValue(std::nullptr_t) : v_(nullptr) {}
  JsonValue(bool b) : v_(b) {}
  JsonValue(JsonNumber n) : v_(std::move(n)) {}
  JsonValue(int v) : v_(JsonNumber::from_int(v)) {}
  JsonValue(std::int64_t v) : v_(JsonNumber::from_int(v)) {}
  JsonValue(double v) : v_(JsonNumber::from_double(v)) {}
  JsonValue(const char* s) : v_(std::string(s)) {}
  JsonValue(std::string s) : v_(std::move(s)) {}
  JsonValue(Array a) : v_(std::move(a)) {}
  JsonValue(Object o) : v_(std::move(o)) {}

  static JsonValue object() { return JsonValue(Object{}); }
  static JsonValue array() { return JsonValue(Array{}); }

  bool is_null() const { return std::holds_alternative<std::nullptr_t>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_number() const { return std::holds_alternative<JsonNumber>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_array() const { return std::holds_alternative<Array>(v_); }
  bool is_object() const { return std::holds_alternative<Object>(v_); }
  bool is_scalar() const { return !is_array() && !is_object(); }

  bool as_bool() const { return std::get<bool>(v_); }
  const JsonNumber& as_number() const { return std::get<JsonNumber>(v_); }
  const std::string& as_string() const { return std::get<std::string>(v_); }
  const Array& as_array() const { return std::get<Array>(v_); }
  Array& as_array() { return std::get<Array>(v_); }
  const Object& as_object() const { return std::get<Object>(v_); }
  Object& as_object() { return std::get<Object>(v_); }

  /// Member count for objects, element count for arrays, 1 for scalars.
  /// This is the "length" the reward computation uses.
  std::size_t length() const;

 private:
  std::variant<std::nullptr_t, bool, JsonNumber, std::string, Array, Object> v_;
};

struct ParseError {
  std::size_t offset = 0;  // byte offset into the input
  std::string reason;
};

/// Strict JSON parser: exactly one document, UTF-8 text, no trailing content,
/// no trailing commas, unique object keys, nesting depth at most 128.
/// Returns nullopt and fills `error` (when given) on any violation.
std::optional<JsonValue> parse_json(std::string_view text, ParseError* error = nullptr);

enum class JsonStyle {
  Compact,  // {"a":1,"b":[1,2]}
  Pretty,   // two-space indentation
};

/// Canonical serialization. Compact output never contains raw newlines, so a
/// compact document always fits on one JSONL line. parse_json(serialize(v))
/// yields a value deep-equal to v; number lexemes are preserved verbatim.
std::string serialize(const JsonValue& v, JsonStyle style = JsonStyle::Compact);

}  // namespace schemaforge
