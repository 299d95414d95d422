#include "hermite/report.hpp"

#include <stdexcept>

namespace hermite {

void Report::put(const std::string& key, std::string value) {
  for (auto& [k, v] : kv_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  kv_.emplace_back(key, std::move(value));
}

void Report::put(const std::string& key, const char* value) { put(key, std::string(value)); }

void Report::put(const std::string& key, const Rational& value) {
  put(key, to_string(value));
}

void Report::put(const std::string& key, long long value) {
  put(key, std::to_string(value));
}

void Report::put(const std::string& key, unsigned value) {
  put(key, std::to_string(value));
}

void Report::put(const std::string& key, bool value) {
  put(key, std::string(value ? "true" : "false"));
}

const std::string* Report::find(const std::string& key) const {
  for (const auto& [k, v] : kv_)
    if (k == key) return &v;
  return nullptr;
}

void Report::note(const std::string& line) {
  std::string resolved;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '{') {
      size_t close = line.find('}', i);
      if (close == std::string::npos)
        throw std::logic_error("Report::note: unterminated placeholder in '" + line + "'");
      std::string key = line.substr(i + 1, close - i - 1);
      const std::string* value = find(key);
      if (!value)
        throw std::logic_error("Report::note: unknown key '" + key + "' in '" + line + "'");
      resolved += *value;
      i = close + 1;
    } else {
      resolved += line[i];
      ++i;
    }
  }
  notes_.push_back(std::move(resolved));
}

std::string Report::text() const {
  std::string out;
  for (const auto& n : notes_) {
    out += n;
    out += '\n';
  }
  return out;
}

std::string Report::keyvalues() const {
  std::string out;
  for (const auto& [k, v] : kv_) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace hermite
