#include "cosets/complex.hpp"

#include <algorithm>
#include <numeric>

#include "cosets/errors.hpp"

namespace cosets {

namespace {

void sort_layer(std::vector<std::uint32_t>& flat, std::size_t width) {
  const std::size_t count = flat.size() / width;
  auto face_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * width, flat.begin() + (a + 1) * width,
                                        flat.begin() + b * width, flat.begin() + (b + 1) * width);
  };
  bool sorted = true;
  for (std::size_t i = 1; i < count && sorted; ++i) sorted = face_less(i - 1, i);
  if (sorted) return;
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), face_less);
  std::vector<std::uint32_t> out;
  out.reserve(flat.size());
  for (std::size_t i = 0; i < count; ++i) {
    auto first = flat.begin() + idx[i] * width;
    if (!out.empty() && std::equal(first, first + width, out.end() - width)) continue;
    out.insert(out.end(), first, first + width);
  }
  flat = std::move(out);
}

}  // namespace

void SimplicialComplex::sort_layers() {
  for (std::size_t k = 0; k < layers_.size(); ++k) sort_layer(layers_[k], k + 1);
  while (!layers_.empty() && layers_.back().empty()) layers_.pop_back();
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertices, const std::vector<std::vector<std::uint32_t>>& faces) {
  SimplicialComplex x;
  x.vertices_ = vertices;
  for (auto face : faces) {
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end()) throw PreconditionError("face repeats a vertex");
    for (auto v : face)
      if (v >= vertices) throw PreconditionError("face vertex out of range");
    if (face.size() > 20) throw BudgetError("from_faces: face too large to close downward");
    // Every nonempty subset.
    const std::size_t n = face.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask)) - 1;
      if (x.layers_.size() <= k) x.layers_.resize(k + 1);
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) x.layers_[k].push_back(face[i]);
    }
  }
  x.sort_layers();
  return x;
}

SimplicialComplex SimplicialComplex::simplex(std::size_t n) {
  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 0u);
  return n == 0 ? SimplicialComplex() : from_faces(n, {all});
}

SimplicialComplex SimplicialComplex::points(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> faces;
  for (std::uint32_t i = 0; i < n; ++i) faces.push_back({i});
  SimplicialComplex x = from_faces(n, faces);
  x.vertices_ = n;
  return x;
}

std::size_t SimplicialComplex::face_count(int dim) const {
  if (dim == -1) return 1;
  if (dim < -1 || dim > dimension()) return 0;
  return layers_[static_cast<std::size_t>(dim)].size() / static_cast<std::size_t>(dim + 1);
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int d = -1; d <= dimension(); ++d) f.push_back(face_count(d));
  return f;
}

std::span<const std::uint32_t> SimplicialComplex::face(int dim, std::size_t index) const {
  if (dim == -1) return {};
  const std::size_t w = static_cast<std::size_t>(dim + 1);
  return std::span<const std::uint32_t>(layers_[static_cast<std::size_t>(dim)]).subspan(index * w, w);
}

std::optional<std::size_t> SimplicialComplex::find_face(int dim, std::span<const std::uint32_t> vertices) const {
  if (dim == -1) return vertices.empty() ? std::optional<std::size_t>(0) : std::nullopt;
  if (dim > dimension() || vertices.size() != static_cast<std::size_t>(dim + 1)) return std::nullopt;
  const auto& flat = layers_[static_cast<std::size_t>(dim)];
  const std::size_t w = vertices.size();
  std::size_t lo = 0, hi = flat.size() / w;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto first = flat.begin() + mid * w;
    if (std::lexicographical_compare(first, first + w, vertices.begin(), vertices.end())) lo = mid + 1;
    else hi = mid;
  }
  if (lo < flat.size() / w && std::equal(vertices.begin(), vertices.end(), flat.begin() + lo * w)) return lo;
  return std::nullopt;
}

bool SimplicialComplex::is_downward_closed() const {
  std::vector<std::uint32_t> sub;
  for (int d = 1; d <= dimension(); ++d)
    for (std::size_t i = 0; i < face_count(d); ++i) {
      auto f = face(d, i);
      for (std::size_t omit = 0; omit < f.size(); ++omit) {
        sub.clear();
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != omit) sub.push_back(f[j]);
        if (!find_face(d - 1, sub)) return false;
      }
    }
  return true;
}

SimplicialComplex order_complex(const FinitePoset& poset) {
  SimplicialComplex x;
  x.vertices_ = poset.size();
  std::vector<std::uint32_t> chain, sorted;
  // Depth-first chain extension; chains are extended only upwards.
  auto emit = [&] {
    sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t k = sorted.size() - 1;
    if (x.layers_.size() <= k) x.layers_.resize(k + 1);
    x.layers_[k].insert(x.layers_[k].end(), sorted.begin(), sorted.end());
  };
  auto extend = [&](auto&& self, std::uint32_t top) -> void {
    for (auto next : poset.above(top)) {
      chain.push_back(next);
      emit();
      self(self, next);
      chain.pop_back();
    }
  };
  for (std::uint32_t v = 0; v < poset.size(); ++v) {
    chain.assign(1, v);
    emit();
    extend(extend, v);
  }
  x.sort_layers();
  return x;
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
  SimplicialComplex z;
  z.vertices_ = x.vertex_count() + y.vertex_count();
  const auto offset = static_cast<std::uint32_t>(x.vertex_count());
  for (int i = -1; i <= x.dimension(); ++i)
    for (int j = -1; j <= y.dimension(); ++j) {
      const int k = i + j + 1;
      if (k < 0) continue;
      if (z.layers_.size() <= static_cast<std::size_t>(k)) z.layers_.resize(static_cast<std::size_t>(k) + 1);
      auto& out = z.layers_[static_cast<std::size_t>(k)];
      for (std::size_t a = 0; a < x.face_count(i); ++a)
        for (std::size_t b = 0; b < y.face_count(j); ++b) {
          auto fx = x.face(i, a);
          out.insert(out.end(), fx.begin(), fx.end());
          for (auto v : y.face(j, b)) out.push_back(v + offset);
        }
    }
  z.sort_layers();
  return z;
}

long long reduced_euler_characteristic(const SimplicialComplex& x) {
  long long chi = 0;
  for (int d = -1; d <= x.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(x.face_count(d));
  return chi;
}

std::uint64_t BettiVector::at(int dim) const {
  const auto i = static_cast<std::size_t>(dim + 1);
  return dim >= -1 && i < values.size() ? values[i] : 0;
}

bool BettiVector::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](std::uint64_t b) { return b == 0; });
}

long long BettiVector::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const long long dim = static_cast<long long>(i) - 1;
    chi += (dim % 2 == 0 ? 1 : -1) * static_cast<long long>(values[i]);
  }
  return chi;
}

std::vector<SparseRow> boundary_rows(const SimplicialComplex& x, int k) {
  std::vector<SparseRow> rows;
  if (k < 0 || k > x.dimension()) return rows;
  rows.reserve(x.face_count(k));
  std::vector<std::uint32_t> sub;
  for (std::size_t i = 0; i < x.face_count(k); ++i) {
    auto f = x.face(k, i);
    SparseRow row;
    for (std::size_t omit = 0; omit < f.size(); ++omit) {
      sub.clear();
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != omit) sub.push_back(f[j]);
      auto col = x.find_face(k - 1, sub);
      if (!col) throw PreconditionError("complex is not downward closed");
      row.emplace_back(static_cast<std::uint32_t>(*col), omit % 2 == 0 ? 1 : -1);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

BettiVector reduced_betti(const SimplicialComplex& x, unsigned p) {
  if (p < 2 || p > 255) throw PreconditionError("reduced_betti: prime must be below 256");
  const int top = x.dimension();
  // ranks[k + 1] = rank of the boundary map out of dimension k.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 3, 0);
  for (int k = 0; k <= top; ++k) {
    auto rows = boundary_rows(x, k);
    ranks[static_cast<std::size_t>(k + 1)] = rank(rows, x.face_count(k - 1), p);
  }
  BettiVector b;
  b.prime = p;
  for (int k = -1; k <= top; ++k) {
    const auto i = static_cast<std::size_t>(k + 1);
    b.values.push_back(x.face_count(k) - ranks[i] - ranks[i + 1]);
  }
  while (!b.values.empty() && b.values.back() == 0) b.values.pop_back();
  return b;
}

bool is_acyclic(const SimplicialComplex& x, unsigned p) { return reduced_betti(x, p).is_zero(); }

BettiVector kunneth_join_betti(const BettiVector& x, const BettiVector& y) {
  if (x.prime != y.prime) throw MismatchError("kunneth_join_betti: coefficient fields differ");
  BettiVector z;
  z.prime = x.prime;
  // values index = dim + 1; dim_z = dim_x + dim_y + 1, so index_z = index_x + index_y.
  for (std::size_t i = 0; i < x.values.size(); ++i)
    for (std::size_t j = 0; j < y.values.size(); ++j) {
      if (z.values.size() <= i + j) z.values.resize(i + j + 1, 0);
      z.values[i + j] += x.values[i] * y.values[j];
    }
  while (!z.values.empty() && z.values.back() == 0) z.values.pop_back();
  return z;
}

}  // namespace cosets
