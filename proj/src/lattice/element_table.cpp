#include <algorithm>
#include <numeric>

#include "cosets/errors.hpp"
#include "cosets/lattice.hpp"

namespace cosets {

namespace {

constexpr std::size_t kPackedDegree = 16;
constexpr std::size_t kTableLimit = 2520;

std::uint64_t pack(const Point* images, std::size_t degree) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < degree; ++i) key = (key << 4) | images[i];
  return key;
}

}  // namespace

ElementTable::ElementTable(const GeneratedGroup& group, std::uint64_t budget)
    : group_(group), degree_(group.degree()) {
  const auto elems = group.elements(budget);
  count_ = elems.size();
  flat_.reserve(count_ * degree_);
  for (const auto& e : elems) flat_.insert(flat_.end(), e.images().begin(), e.images().end());
  if (degree_ <= kPackedDegree) {
    packed_keys_.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) packed_keys_.push_back(pack(flat_.data() + i * degree_, degree_));
  } else {
    for (std::size_t i = 0; i < count_; ++i) index_.emplace(elems[i], static_cast<ElementId>(i));
  }
  inverses_.resize(count_);
  std::vector<Point> buf(degree_);
  for (std::size_t i = 0; i < count_; ++i) {
    const Point* img = flat_.data() + i * degree_;
    for (std::size_t x = 0; x < degree_; ++x) buf[img[x]] = static_cast<Point>(x);
    inverses_[i] = *find_images(buf.data());
  }
  if (count_ <= kTableLimit) {
    table_.resize(count_ * count_);
    for (std::size_t a = 0; a < count_; ++a) {
      const Point* pa = flat_.data() + a * degree_;
      for (std::size_t b = 0; b < count_; ++b) {
        const Point* pb = flat_.data() + b * degree_;
        for (std::size_t x = 0; x < degree_; ++x) buf[x] = pb[pa[x]];
        table_[a * count_ + b] = static_cast<std::uint16_t>(*find_images(buf.data()));
      }
    }
  }
}

std::optional<ElementId> ElementTable::find_images(const Point* images) const {
  if (degree_ <= kPackedDegree) {
    const std::uint64_t key = pack(images, degree_);
    auto it = std::lower_bound(packed_keys_.begin(), packed_keys_.end(), key);
    if (it == packed_keys_.end() || *it != key) return std::nullopt;
    return static_cast<ElementId>(it - packed_keys_.begin());
  }
  Permutation p = Permutation::from_images(std::vector<Point>(images, images + degree_));
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Permutation ElementTable::element(ElementId id) const {
  const Point* img = flat_.data() + static_cast<std::size_t>(id) * degree_;
  return Permutation::from_images(std::vector<Point>(img, img + degree_));
}

std::optional<ElementId> ElementTable::find(const Permutation& p) const {
  if (p.degree() != degree_) throw MismatchError("element lookup: degree mismatch");
  return find_images(p.images().data());
}

ElementId ElementTable::id(const Permutation& p) const {
  auto found = find(p);
  if (!found) throw PreconditionError("element " + to_cycle_string(p) + " is not in the group");
  return *found;
}

ElementId ElementTable::mul(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * count_ + b];
  Point buf[256];
  std::vector<Point> big;
  Point* out = buf;
  if (degree_ > 256) {
    big.resize(degree_);
    out = big.data();
  }
  const Point* pa = flat_.data() + static_cast<std::size_t>(a) * degree_;
  const Point* pb = flat_.data() + static_cast<std::size_t>(b) * degree_;
  for (std::size_t x = 0; x < degree_; ++x) out[x] = pb[pa[x]];
  return *find_images(out);
}

std::uint64_t ElementTable::order_of(ElementId a) const {
  std::uint64_t n = 1;
  for (ElementId x = a; x != 0; x = mul(x, a)) ++n;
  return n;
}

}  // namespace cosets
