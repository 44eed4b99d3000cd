#include "symvar/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace symvar {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::row(unsigned n) { return n == 0 ? Partition{} : Partition(std::vector<unsigned>{n}); }

Partition Partition::column(unsigned n) { return Partition(std::vector<unsigned>(n, 1)); }

unsigned Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

Partition Partition::transpose() const {
  std::vector<unsigned> t(first_part(), 0);
  for (unsigned p : parts_)
    for (unsigned j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

unsigned Partition::hook(unsigned i, unsigned j) const {
  if (i < 1 || i > length() || j < 1 || j > parts_[i - 1]) throw std::out_of_range("box outside the Young diagram");
  unsigned leg = 0;
  for (unsigned r = i; r < length() && parts_[r] >= j; ++r) ++leg;
  return (parts_[i - 1] - j) + leg + 1;
}

std::vector<unsigned> Partition::multiplicities() const {
  std::vector<unsigned> m(first_part() + 1, 0);
  for (unsigned p : parts_) ++m[p];
  return m;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void enumerate(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  enumerate(n, n, prefix, out);
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<unsigned> parts;
  std::size_t start = 0;
  if (text.empty()) return {};
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string piece(text.substr(start, comma - start));
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != piece.size()) throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    parts.push_back(static_cast<unsigned>(v));
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition partition_from_json(const nlohmann::json& j) { return Partition(j.get<std::vector<unsigned>>()); }

}  // namespace symvar
