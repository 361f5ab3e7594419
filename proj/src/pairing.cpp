#include "mapenum/pairing.hpp"

#include <algorithm>
#include <string>

#include "mapenum/errors.hpp"

namespace mapenum {

Pairing::Pairing(std::vector<int> partner) : partner_(std::move(partner)) {
  const int n = ground_size();
  for (int i = 0; i < n; ++i) {
    const int j = partner_[static_cast<std::size_t>(i)];
    require(j >= 0 && j < n, "Pairing: partner of " + std::to_string(i) + " out of range");
    require(j != i, "Pairing: element " + std::to_string(i) + " is a fixed point");
    require(partner_[static_cast<std::size_t>(j)] == i,
            "Pairing: not an involution at " + std::to_string(i));
  }
}

Pairing Pairing::from_pairs(int ground_size, std::span<const std::pair<int, int>> pairs) {
  require(ground_size >= 0, "Pairing: negative ground size");
  std::vector<int> partner(static_cast<std::size_t>(ground_size), -1);
  for (const auto& [a, b] : pairs) {
    require(a >= 0 && a < ground_size && b >= 0 && b < ground_size, "Pairing: element out of range");
    require(partner[static_cast<std::size_t>(a)] == -1 && partner[static_cast<std::size_t>(b)] == -1,
            "Pairing: element used twice");
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
  return Pairing(std::move(partner));
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < ground_size(); ++i) {
    if (i < partner(i)) out.emplace_back(i, partner(i));
  }
  return out;
}

int cycle_count(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    require(v >= 0 && v < n, "cycle_count: value out of range");
    require(!seen[static_cast<std::size_t>(v)], "cycle_count: not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = perm[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return cycles;
}

std::vector<int> compose(std::span<const int> outer, std::span<const int> inner) {
  require(outer.size() == inner.size(), "compose: size mismatch");
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

std::vector<int> inverse(std::span<const int> perm) {
  std::vector<int> out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  return out;
}

TwoRowGround::TwoRowGround(int p1_, int p2_) : p1(p1_), p2(p2_) {
  require(p1 >= 0 && p2 >= 0, "TwoRowGround: row lengths must be non-negative");
  require((p1 + p2) % 2 == 0, "TwoRowGround: p1 + p2 must be even");
}

std::vector<int> TwoRowGround::canonical_cycle() const {
  std::vector<int> gamma(static_cast<std::size_t>(size()));
  for (int row = 0; row < 2; ++row) {
    const int len = row_length(row);
    for (int pos = 0; pos < len; ++pos) {
      gamma[static_cast<std::size_t>(index(row, pos))] = index(row, (pos + 1) % len);
    }
  }
  return gamma;
}

std::vector<int> single_cycle(int n) {
  std::vector<int> gamma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) gamma[static_cast<std::size_t>(i)] = (i + 1) % n;
  return gamma;
}

int face_count(const Pairing& mu, std::span<const int> gamma) {
  const std::vector<int> gamma_inv = inverse(gamma);
  return cycle_count(compose(mu.partners(), gamma_inv));
}

}  // namespace mapenum
