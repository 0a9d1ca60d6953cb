#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace conatus {

/// One way the world can be: a total truth assignment over a declared atom
/// universe. Lookups outside the universe throw UnknownAtomError.
class Circumstance {
 public:
  Circumstance() = default;
  explicit Circumstance(std::map<std::string, bool> values) : values_(std::move(values)) {}
  Circumstance(std::initializer_list<std::pair<const std::string, bool>> values)
      : values_(values) {}

  bool value(const std::string& atom) const;
  bool contains(const std::string& atom) const { return values_.count(atom) != 0; }
  void set(const std::string& atom, bool value) { values_[atom] = value; }

  const std::map<std::string, bool>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

  /// "C1=0, C2=1" in lexicographic atom order.
  std::string to_string() const;

  bool operator==(const Circumstance& other) const { return values_ == other.values_; }

 private:
  std::map<std::string, bool> values_;
};

/// A time-indexed sequence of circumstances over a fixed universe. Sparse:
/// atoms start out false and each update persists until overwritten, so
/// at(t) is total for every t >= 0.
class World {
 public:
  World() = default;
  explicit World(std::vector<std::string> universe);

  /// Records that `atom` has value `value` from step `t` onward.
  void set(int t, const std::string& atom, bool value);

  const std::vector<std::string>& universe() const { return universe_; }

  Circumstance at(int t) const;

 private:
  std::vector<std::string> universe_;
  std::map<int, std::map<std::string, bool>> updates_;
};

}  // namespace conatus
