#include "mapcensus/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "mapcensus/error.hpp"

namespace mapcensus {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

bool is_permutation(std::span<const std::uint32_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
  return out;
}

Perm power(const Perm& p, std::uint64_t e) {
  Perm result = identity_perm(p.size());
  Perm base = p;
  while (e > 0) {
    if (e & 1u) result = compose(base, result);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

Perm conjugate(const Perm& p, const Perm& tau) {
  // (τ p τ^-1)(τ(x)) = τ(p(x))
  Perm out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[tau[x]] = tau[p[x]];
  return out;
}

std::vector<std::vector<std::uint32_t>> cycles(const Perm& p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    auto& c = out.emplace_back();
    for (auto x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      c.push_back(x);
    }
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles(p)) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t perm_order(const Perm& p) {
  std::uint64_t o = 1;
  for (auto len : cycle_type(p)) o = std::lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the images
  std::size_t h = 1469598103934665603ull;
  for (auto x : p) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  Perm p = identity_perm(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(Reason::ParseError, "expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::uint32_t> cyc;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw Error(Reason::ParseError, "expected a point in cycle notation: " + std::string(text));
      auto point = std::stoul(std::string(text.substr(i, j - i)));
      if (point < 1 || point > degree)
        throw Error(Reason::OutOfRange, "point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      if (used[point - 1]) throw Error(Reason::ParseError, "point " + std::to_string(point) + " repeated");
      used[point - 1] = true;
      cyc.push_back(static_cast<std::uint32_t>(point - 1));
      i = j;
      skip_space();
    }
    if (i >= text.size()) throw Error(Reason::ParseError, "unterminated cycle: " + std::string(text));
    ++i;
    for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_space();
  }
  return p;
}

}  // namespace mapcensus
