#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace tpc {

// Incremental SHA-256 (FIPS 180-4); used for canonical-form digests.
class Sha256 {
 public:
  Sha256();
  void update(const void* data, size_t len);
  void update_u32(uint32_t v);  // big-endian
  std::array<uint8_t, 32> finish();

 private:
  void process_block(const uint8_t* p);
  uint32_t h_[8];
  uint64_t total_len_;
  uint8_t buf_[64];
  size_t buf_len_;
};

std::string hex_digest(const std::array<uint8_t, 32>& d);

}  // namespace tpc
