#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

namespace symvar {

/// Integer partition: weakly decreasing positive parts.  The empty partition
/// (of 0) has first part 0 and length 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

  /// (n) and 1^n.
  static Partition row(unsigned n);
  static Partition column(unsigned n);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const;
  unsigned length() const { return static_cast<unsigned>(parts_.size()); }
  unsigned first_part() const { return parts_.empty() ? 0 : parts_.front(); }
  /// 0-based row access; rows beyond the length are 0.
  unsigned operator[](unsigned i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition transpose() const;
  /// Hook length of box (i, j), 1-based: lambda_i + lambda'_j - i - j + 1.
  unsigned hook(unsigned i, unsigned j) const;
  /// m_k: how many parts equal k.
  std::vector<unsigned> multiplicities() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> partitions_of(unsigned n);

Partition parse_partition(std::string_view text);

inline nlohmann::json to_json(const Partition& p) { return p.parts(); }
Partition partition_from_json(const nlohmann::json& j);

}  // namespace symvar
