#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lisbon/sym_point.hpp"

namespace lisbon {

// All machine-readable output goes through these helpers so that a fixed
// job produces byte-identical files: floats always carry 17 significant
// digits and object keys appear in a fixed order.

std::string format_double(double x);            // %.17g
std::string format_complex(Complex z);          // "re" or "re+imi"
std::string json_complex(Complex z);            // {"re":...,"im":...}
std::string json_escape(const std::string& s);

Complex parse_complex(const std::string& text);  // throws std::invalid_argument
std::vector<Complex> parse_complex_list(const std::string& csv);

// Minimal sequential JSON builder with explicit structure control.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array(const std::string& key);
  JsonWriter& begin_array();  // element of an enclosing array
  JsonWriter& end_array();
  JsonWriter& begin_object(const std::string& key);
  JsonWriter& object_element();  // begin object as array element

  JsonWriter& field(const std::string& key, const std::string& value);
  JsonWriter& field(const std::string& key, const char* value);
  JsonWriter& field(const std::string& key, double value);
  JsonWriter& field(const std::string& key, int value);
  JsonWriter& field(const std::string& key, std::uint64_t value);
  JsonWriter& field(const std::string& key, bool value);
  JsonWriter& field_complex(const std::string& key, Complex value);
  JsonWriter& field_raw(const std::string& key, const std::string& raw);
  JsonWriter& element(Complex value);
  JsonWriter& element_raw(const std::string& raw);

  const std::string& str() const { return out_; }

 private:
  std::string out_;
  std::vector<bool> first_;  // per nesting level

  void comma();
  void key_prefix(const std::string& key);
};

}  // namespace lisbon
