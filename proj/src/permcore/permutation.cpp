#include "cosets/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cosets/errors.hpp"

namespace cosets {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > 0xFFFF) throw PreconditionError("permutation degree exceeds 65535");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<char> seen(images.size(), 0);
  for (Point v : images) {
    if (v >= images.size() || seen[v]) throw PreconditionError("image sequence is not a bijection");
    seen[v] = 1;
  }
  return Permutation(std::move(images), 0);
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<Point> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1) throw PreconditionError("points are 1-based");
    zero[i] = static_cast<Point>(images[i] - 1);
  }
  return from_images(std::move(zero));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  const std::size_t n = p.degree();
  if (q.degree() != n) throw MismatchError("compose: degree mismatch");
  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = q.images_[p.images_[i]];
  return Permutation(std::move(out), 0);
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) out[p.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out), 0);
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  if (p.degree() != g.degree()) throw MismatchError("conjugate: degree mismatch");
  // i -> g^-1 -> p -> g, so (i^g)^(g^-1 p g) = (i^p)^g.
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) out[g[i]] = g[p[i]];
  return Permutation::from_images(std::move(out));
}

Permutation power(const Permutation& p, long long k) {
  Permutation base = k < 0 ? inverse(p) : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  Permutation acc(p.degree());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

namespace {

template <class F>
void for_each_cycle(const Permutation& p, F&& f) {
  std::vector<char> seen(p.degree(), 0);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    f(i, len);
  }
}

}  // namespace

int sign(const Permutation& p) {
  std::size_t transpositions = 0;
  for_each_cycle(p, [&](std::size_t, std::size_t len) { transpositions += len - 1; });
  return transpositions % 2 == 0 ? 1 : -1;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t acc = 1;
  for_each_cycle(p, [&](std::size_t, std::size_t len) { acc = std::lcm(acc, static_cast<std::uint64_t>(len)); });
  return acc;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> out;
  for_each_cycle(p, [&](std::size_t, std::size_t len) { out.push_back(len); });
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::size_t fixed_point_count(const Permutation& p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) n += p[i] == i;
  return n;
}

Permutation extend(const Permutation& p, std::size_t degree) { return shift(p, 0, degree); }

Permutation shift(const Permutation& p, std::size_t offset, std::size_t degree) {
  if (offset + p.degree() > degree) throw PreconditionError("shift: target degree too small");
  std::vector<Point> out(degree);
  std::iota(out.begin(), out.end(), Point{0});
  for (std::size_t i = 0; i < p.degree(); ++i) out[offset + i] = static_cast<Point>(offset + p[i]);
  return Permutation::from_images(std::move(out));
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream os;
  std::vector<char> seen(p.degree(), 0);
  bool any = false;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (j != i) os << ',';
      os << j + 1;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::vector<char> used(degree, 0);
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<std::size_t> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    for (;;) {
      skip_ws();
      std::size_t start = i;
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 0xFFFF) throw ParseError("point out of range in \"" + std::string(text) + "\"");
        ++i;
      }
      if (i == start) throw ParseError("expected a point in \"" + std::string(text) + "\"");
      if (value < 1 || value > degree)
        throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      if (used[value - 1]) throw ParseError("point " + std::to_string(value) + " repeated");
      used[value - 1] = 1;
      cycle.push_back(value - 1);
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("unexpected character in \"" + std::string(text) + "\"");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> parse_generator_list(std::string_view text, std::size_t degree) {
  std::vector<Permutation> out;
  std::size_t depth = 0, start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    bool blank = std::all_of(piece.begin(), piece.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back(parse_cycles(piece, degree));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') {
      if (depth == 0) throw ParseError("unbalanced ')' in \"" + std::string(text) + "\"");
      --depth;
    } else if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
  flush(text.size());
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cosets
