#include "cosets/standard_groups.hpp"

#include <numeric>

#include "cosets/errors.hpp"

namespace cosets {

Permutation long_cycle(std::size_t n, std::size_t degree) {
  if (n > degree || n == 0) throw PreconditionError("long_cycle: length out of range");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return Permutation::from_images(std::move(images));
}

GeneratedGroup symmetric_group(std::size_t n) {
  if (n < 2) return GeneratedGroup::trivial(std::max<std::size_t>(n, 1));
  return GeneratedGroup({parse_cycles("(1,2)", n), long_cycle(n, n)}, n);
}

GeneratedGroup alternating_group(std::size_t n) {
  if (n < 3) return GeneratedGroup::trivial(std::max<std::size_t>(n, 1));
  Permutation three = parse_cycles("(1,2,3)", n);
  if (n % 2 == 1) return GeneratedGroup({three, long_cycle(n, n)}, n);
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 1; i < n; ++i) images[i] = static_cast<Point>(i + 1 < n ? i + 1 : 1);
  return GeneratedGroup({three, Permutation::from_images(std::move(images))}, n);
}

GeneratedGroup cyclic_group(std::size_t n) {
  if (n < 2) return GeneratedGroup::trivial(1);
  return GeneratedGroup({long_cycle(n, n)}, n);
}

GeneratedGroup group_from_text(std::string_view generators, std::size_t degree) {
  return GeneratedGroup(parse_generator_list(generators, degree), degree);
}

}  // namespace cosets
