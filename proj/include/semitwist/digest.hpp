#pragma once

#include <cstdint>
#include <iterator>
#include <string>

namespace semitwist {

/// FNV-1a over a canonical byte stream. Used for instance digests in reports;
/// stable across runs and platforms for the same construction recipe.
class Digest {
 public:
  Digest& feed(uint64_t v) {
    for (int i = 0; i < 8; ++i) byte(uint8_t(v >> (8 * i)));
    return *this;
  }
  Digest& feed(long long v) { return feed(uint64_t(v)); }
  Digest& feed(int v) { return feed(uint64_t(int64_t(v))); }
  Digest& feed(const std::string& s) {
    feed(uint64_t(s.size()));
    for (char c : s) byte(uint8_t(c));
    return *this;
  }
  template <class R>
  Digest& feed_range(const R& r) {
    feed(uint64_t(std::size(r)));
    for (auto v : r) feed(uint64_t(int64_t(v)));
    return *this;
  }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 0; i < 16; ++i) s[i] = digits[(h_ >> (60 - 4 * i)) & 0xF];
    return s;
  }

 private:
  void byte(uint8_t b) {
    h_ ^= b;
    h_ *= 1099511628211ull;
  }
  uint64_t h_ = 1469598103934665603ull;
};

}  // namespace semitwist
