#pragma once

#include <cstdint>
#include <vector>

#include "frankl/common.hpp"

namespace frankl {

// A self-map of {1, ..., k} given by its image table (1-based values).
struct EndoFunction {
  std::vector<std::uint32_t> image;

  std::size_t domain_size() const noexcept { return image.size(); }

  std::uint32_t apply(std::uint32_t x) const { return image[x - 1]; }

  // Rejects empty domains and out-of-range image values.
  void validate() const;

  // Length of the cycle through x, or 0 when x is not on a cycle.
  std::uint32_t cycle_length(std::uint32_t x) const;
};

}  // namespace frankl
