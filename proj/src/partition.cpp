#include "thom/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "thom/error.hpp"

namespace thom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw InvariantError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_exponents(std::span<const int> exponents) {
  std::vector<int> parts;
  for (int e : exponents)
    if (e != 0) parts.push_back(e);
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return ParseError("bad partition '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw fail("expected '['");
  ++i;
  std::vector<int> parts;
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    for (;;) {
      skip();
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) throw fail("expected integer at offset " + std::to_string(i));
      if (value < 1) throw fail("parts must be positive");
      i = static_cast<std::size_t>(ptr - text.data());
      parts.push_back(value);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw fail("expected ',' or ']' at offset " + std::to_string(i));
    }
  }
  skip();
  if (i != text.size()) throw fail("trailing characters");
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw fail("parts must be weakly decreasing");
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, std::max(0, max_part));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto ps = partitions_of(w);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

}  // namespace thom
