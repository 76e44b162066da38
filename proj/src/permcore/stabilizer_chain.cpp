#include <algorithm>

#include "cosets/errors.hpp"
#include "cosets/group.hpp"

namespace cosets {

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators)
    : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw MismatchError("generator degree differs from group degree");
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) != strong_.end()) continue;
    strong_.push_back(g);
  }
  if (strong_.empty()) return;

  for (std::size_t s = 0; s < strong_.size(); ++s) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](const Level& l) { return strong_[s][l.base_point] == l.base_point; });
    if (fixes_base) append_level(static_cast<Point>(strong_[s].first_moved_point()));
  }
  for (std::size_t s = 0; s < strong_.size(); ++s) levels_[0].generators.push_back(s);
  for (std::size_t l = 1; l < levels_.size(); ++l) {
    for (std::size_t s = 0; s < strong_.size(); ++s) {
      bool fixes = true;
      for (std::size_t m = 0; m < l && fixes; ++m) fixes = strong_[s][levels_[m].base_point] == levels_[m].base_point;
      if (fixes) levels_[l].generators.push_back(s);
    }
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);

  // Holt's deterministic Schreier-Sims: verify levels bottom-up; whenever a
  // Schreier generator fails to sift, add the residue and restart there.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t a = 0; a < levels_[li].orbit.size() && !restarted; ++a) {
      for (std::size_t gi = 0; gi < levels_[li].generators.size() && !restarted; ++gi) {
        const Level& lv = levels_[li];
        const Permutation& s = strong_[lv.generators[gi]];
        const Point image = s[lv.orbit[a]];
        const Permutation& rep_next = lv.reps[static_cast<std::size_t>(lv.slot[image])];
        Permutation us = lv.reps[a] * s;
        if (us == rep_next) continue;
        Permutation schreier = us * lv.rep_inverses[static_cast<std::size_t>(lv.slot[image])];
        auto [residue, stop] = sift(schreier, li + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) append_level(static_cast<Point>(residue.first_moved_point()));
        strong_.push_back(std::move(residue));
        for (std::size_t l = li + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(strong_.size() - 1);
          rebuild_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::append_level(Point base_point) {
  Level l;
  l.base_point = base_point;
  l.slot.assign(degree_, -1);
  levels_.push_back(std::move(l));
  rebuild_orbit(levels_.size() - 1);
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& l = levels_[level];
  std::fill(l.slot.begin(), l.slot.end(), -1);
  l.orbit.assign(1, l.base_point);
  l.reps.assign(1, Permutation(degree_));
  l.rep_inverses.assign(1, Permutation(degree_));
  l.slot[l.base_point] = 0;
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    for (std::size_t gi : l.generators) {
      const Permutation& s = strong_[gi];
      Point next = s[l.orbit[k]];
      if (l.slot[next] >= 0) continue;
      l.slot[next] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(next);
      Permutation rep = l.reps[k] * s;
      l.rep_inverses.push_back(inverse(rep));
      l.reps.push_back(std::move(rep));
    }
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto& l : levels_) n *= l.orbit.size();
  return n;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& g, std::size_t from_level) const {
  Permutation h = g;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    std::int32_t s = lv.slot[h[lv.base_point]];
    if (s < 0) return {std::move(h), l};
    h = h * lv.rep_inverses[static_cast<std::size_t>(s)];
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw MismatchError("membership: degree mismatch");
  return sift(g).first.is_identity();
}

}  // namespace cosets
