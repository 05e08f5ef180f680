#include "invcensus/permutation.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "invcensus/error.hpp"
#include "sporadic_data.hpp"

namespace invcensus {

Permutation Permutation::identity(unsigned degree) {
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<std::uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) throw Error(ErrorKind::ParseError, "image vector is not a bijection");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(unsigned degree, std::string_view text) {
  auto images = identity(degree).images_;
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected '('");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unbalanced parenthesis");
    std::vector<unsigned> cycle;
    std::size_t i = pos + 1;
    while (i < close) {
      const char c = text[i];
      if (c == ' ' || c == ',' || c == '\t') {
        ++i;
        continue;
      }
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + close, value);
      if (ec != std::errc()) fail("expected a point number");
      if (value >= degree) fail("point " + std::to_string(value) + " outside degree " + std::to_string(degree));
      if (used[value]) fail("point " + std::to_string(value) + " repeated");
      used[value] = true;
      cycle.push_back(value);
      i = static_cast<std::size_t>(ptr - text.data());
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_even() const {
  std::vector<bool> seen(degree(), false);
  unsigned transpositions = 0;
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    for (unsigned j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      os << (j == i ? "" : " ") << j;
    }
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "()" : s;
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::DegreeMismatch, "permutation degrees differ");
  std::vector<std::uint8_t> out(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) out[i] = static_cast<std::uint8_t>(a(b(i)));
  return Permutation::from_images(std::move(out));
}

Permutation perm_inverse(const Permutation& a) {
  std::vector<std::uint8_t> out(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) out[a(i)] = static_cast<std::uint8_t>(i);
  return Permutation::from_images(std::move(out));
}

std::uint64_t perm_order(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  std::uint64_t order = 1;
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (unsigned j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::vector<SporadicGenerators> parse_sporadic_generators(std::string_view text) {
  std::vector<SporadicGenerators> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    SporadicGenerators rec;
    if (!(fields >> rec.name >> rec.degree >> rec.expected_order))
      throw Error(ErrorKind::ParseError, "malformed generator line: " + line);
    if (rec.degree == 0 || rec.degree > kMaxPermDegree)
      throw Error(ErrorKind::ParseError, "unsupported degree in line: " + line);
    std::string rest;
    std::getline(fields, rest);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto end = rest.find(';', start);
      const auto piece = rest.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (piece.find_first_not_of(" \t\r") != std::string::npos)
        rec.generators.push_back(Permutation::from_cycles(rec.degree, piece));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    if (rec.generators.empty()) throw Error(ErrorKind::ParseError, "no generators in line: " + line);
    out.push_back(std::move(rec));
  }
  return out;
}

const std::vector<SporadicGenerators>& builtin_sporadic_generators() {
  static const auto table = parse_sporadic_generators(detail::kSporadicGeneratorsText);
  return table;
}

std::vector<Permutation> standard_generators(std::string_view name) {
  if (name == "cyclic:2") return {Permutation::from_cycles(2, "(0 1)")};
  if (name.starts_with("alt:")) {
    unsigned n = 0;
    const auto digits = name.substr(4);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 3 || n > 10)
      throw Error(ErrorKind::UnknownName, "alternating groups are alt:3 .. alt:10, got " + std::string(name));
    std::vector<Permutation> gens;
    for (unsigned k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, "(0 1 " + std::to_string(k) + ")"));
    return gens;
  }
  for (const auto& rec : builtin_sporadic_generators())
    if (rec.name == name) return rec.generators;
  throw Error(ErrorKind::UnknownName, "no standard generators for '" + std::string(name) + "'");
}

PermutationOps::PermutationOps(unsigned degree) : degree_(degree) {
  if (degree_ == 0 || degree_ > kMaxPermDegree)
    throw Error(ErrorKind::DegreeMismatch, "permutation degree must be 1.." + std::to_string(kMaxPermDegree));
  identity_ = encode(Permutation::identity(degree_));
}

// Image of point i sits in nibble (degree-1-i), so the first image is the
// most significant.
ElementKey PermutationOps::multiply(ElementKey a, ElementKey b) const {
  const unsigned top = 4 * (degree_ - 1);
  ElementKey out = 0;
  for (unsigned i = 0; i < degree_; ++i) {
    const auto bi = static_cast<unsigned>((b >> (top - 4 * i)) & 0xF);
    const auto abi = (a >> (top - 4 * bi)) & 0xF;
    out = (out << 4) | abi;
  }
  return out;
}

ElementKey PermutationOps::inverse(ElementKey a) const {
  const unsigned top = 4 * (degree_ - 1);
  ElementKey out = 0;
  for (unsigned i = 0; i < degree_; ++i) {
    const auto ai = static_cast<unsigned>((a >> (top - 4 * i)) & 0xF);
    out |= ElementKey{i} << (top - 4 * ai);
  }
  return out;
}

std::vector<std::uint8_t> PermutationOps::encoding(ElementKey a) const { return decode(a).images(); }

std::string PermutationOps::describe(ElementKey a) const { return decode(a).to_cycles(); }

ElementKey PermutationOps::encode(const Permutation& p) const {
  if (p.degree() != degree_) throw Error(ErrorKind::DegreeMismatch, "permutation degree differs from group");
  ElementKey key = 0;
  for (unsigned i = 0; i < degree_; ++i) key = (key << 4) | p(i);
  return key;
}

Permutation PermutationOps::decode(ElementKey key) const {
  std::vector<std::uint8_t> images(degree_);
  for (unsigned i = degree_; i-- > 0;) {
    images[i] = static_cast<std::uint8_t>(key & 0xF);
    key >>= 4;
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace invcensus
