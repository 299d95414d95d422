#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hermite/rational.hpp"

namespace hermite {

// Evidence accumulator with two renderings of the same data: a key=value
// block for machines and prose for people.  Prose lines are written with
// {key} placeholders, which are resolved against the stored values when the
// note is added, so a value can never appear in one rendering and not the
// other.
class Report {
 public:
  void put(const std::string& key, std::string value);
  void put(const std::string& key, const char* value);
  void put(const std::string& key, const Rational& value);
  void put(const std::string& key, long long value);
  void put(const std::string& key, unsigned value);
  void put(const std::string& key, bool value);

  const std::string* find(const std::string& key) const;

  // adds a prose line; {key} placeholders must refer to stored keys
  void note(const std::string& line);

  std::string text() const;       // prose lines, newline separated
  std::string keyvalues() const;  // key=value lines in insertion order

 private:
  std::vector<std::pair<std::string, std::string>> kv_;
  std::vector<std::string> notes_;
};

}  // namespace hermite
