#include "lisbon/report.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lisbon {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string im = format_double(z.imag());
  if (z.real() == 0.0) return im + "i";
  if (!im.empty() && im[0] != '-') im = "+" + im;
  return format_double(z.real()) + im + "i";
}

std::string json_complex(Complex z) {
  return "{\"re\":" + format_double(z.real()) +
         ",\"im\":" + format_double(z.imag()) + "}";
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  auto parse_real = [](const std::string& r) -> double {
    if (r.empty() || r == "+") return 1.0;
    if (r == "-") return -1.0;
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(r, &pos);
    } catch (...) {
      throw std::invalid_argument("bad numeric literal: " + r);
    }
    if (pos != r.size()) throw std::invalid_argument("bad numeric literal: " + r);
    return v;
  };

  if (s.back() != 'i' && s.back() != 'I') {
    return {parse_real(s), 0.0};  // purely real
  }
  s.pop_back();  // strip the i
  // find the split between real and imaginary parts: the last +/- that is
  // not an exponent sign and not the leading sign
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(s)};
  return {parse_real(s.substr(0, split)), parse_real(s.substr(split))};
}

std::vector<Complex> parse_complex_list(const std::string& csv) {
  std::vector<Complex> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(parse_complex(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(parse_complex(cur));
  return out;
}

void JsonWriter::comma() {
  if (first_.empty()) return;
  if (first_.back())
    first_.back() = false;
  else
    out_ += ",";
}

void JsonWriter::key_prefix(const std::string& key) {
  comma();
  out_ += "\"" + json_escape(key) + "\":";
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ += "{";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::begin_object(const std::string& key) {
  key_prefix(key);
  out_ += "{";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::object_element() { return begin_object(); }

JsonWriter& JsonWriter::end_object() {
  out_ += "}";
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& key) {
  key_prefix(key);
  out_ += "[";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  comma();
  out_ += "[";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += "]";
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const std::string& value) {
  key_prefix(key);
  out_ += "\"" + json_escape(value) + "\"";
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const char* value) {
  return field(key, std::string(value));
}

JsonWriter& JsonWriter::field(const std::string& key, double value) {
  key_prefix(key);
  if (std::isfinite(value))
    out_ += format_double(value);
  else
    out_ += "\"" + format_double(value) + "\"";
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, int value) {
  key_prefix(key);
  out_ += std::to_string(value);
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, std::uint64_t value) {
  key_prefix(key);
  out_ += std::to_string(value);
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, bool value) {
  key_prefix(key);
  out_ += value ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::field_complex(const std::string& key, Complex value) {
  key_prefix(key);
  out_ += json_complex(value);
  return *this;
}

JsonWriter& JsonWriter::field_raw(const std::string& key, const std::string& raw) {
  key_prefix(key);
  out_ += raw;
  return *this;
}

JsonWriter& JsonWriter::element(Complex value) {
  comma();
  out_ += json_complex(value);
  return *this;
}

JsonWriter& JsonWriter::element_raw(const std::string& raw) {
  comma();
  out_ += raw;
  return *this;
}

}  // namespace lisbon
