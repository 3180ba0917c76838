#include "granule/cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace granule {

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const CoverProblem& p) : p_(p) {
    for (const auto& c : p_.candidates)
      if (!ids_.insert(c.id).second) throw std::invalid_argument("duplicate cover candidate id");
    for (const auto& c : p_.candidates)
      if (c.extent.universe() != p_.target.universe())
        throw std::invalid_argument("cover candidate over a different universe");
  }

  std::vector<ObjectSet> run() {
    std::vector<bool> banned(p_.candidates.size(), false);
    descend(ObjectSet(p_.target.universe()), banned);
    return std::move(found_);
  }

 private:
  bool dominated(const ObjectSet& partial) const {
    return std::any_of(found_.begin(), found_.end(),
                       [&](const ObjectSet& f) { return f.is_subset_of(partial); });
  }

  void record(const ObjectSet& u) {
    // Found unions that contain `u` can no longer be minimal.
    std::erase_if(found_, [&](const ObjectSet& f) { return u.is_subset_of(f); });
    found_.push_back(u);
  }

  void descend(const ObjectSet& partial, std::vector<bool>& banned) {
    if (dominated(partial)) return;

    auto missing = p_.target - partial;
    if (missing.empty()) {
      if (!p_.strict || partial != p_.target) {
        record(partial);
        return;
      }
      // The union equals the target exactly; one more candidate reaching
      // outside the target is needed.
      for (const auto& c : p_.candidates) {
        if (c.extent.is_subset_of(p_.target)) continue;
        auto next = partial | c.extent;
        if (!dominated(next)) record(next);
      }
      return;
    }

    std::size_t pivot = missing.members().front();
    std::vector<std::size_t> options;
    for (std::size_t k = 0; k < p_.candidates.size(); ++k)
      if (!banned[k] && p_.candidates[k].extent.contains(pivot)) options.push_back(k);
    std::stable_sort(options.begin(), options.end(), [&](std::size_t x, std::size_t y) {
      return (p_.candidates[x].extent - partial).size() > (p_.candidates[y].extent - partial).size();
    });

    // Branch k uses options[k] and excludes options[0..k) below it, so every
    // candidate subset is visited at most once.
    std::vector<std::size_t> newly_banned;
    for (auto k : options) {
      descend(partial | p_.candidates[k].extent, banned);
      banned[k] = true;
      newly_banned.push_back(k);
    }
    for (auto k : newly_banned) banned[k] = false;
  }

  const CoverProblem& p_;
  std::unordered_set<std::size_t> ids_;
  std::vector<ObjectSet> found_;
};

}  // namespace

std::vector<Cover> enumerate_minimal_covers(const CoverProblem& problem) {
  auto unions = CoverSearch(problem).run();
  std::sort(unions.begin(), unions.end(), [](const ObjectSet& a, const ObjectSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  unions.erase(std::unique(unions.begin(), unions.end()), unions.end());

  std::vector<Cover> out;
  out.reserve(unions.size());
  for (auto& u : unions) {
    Cover c{{}, u};
    for (const auto& cand : problem.candidates)
      if (cand.extent.is_subset_of(u)) c.ids.push_back(cand.id);
    std::sort(c.ids.begin(), c.ids.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CoverCandidate> meeting(const std::vector<CoverCandidate>& candidates,
                                    const ObjectSet& target) {
  std::vector<CoverCandidate> out;
  for (const auto& c : candidates)
    if (c.extent.intersects(target)) out.push_back(c);
  return out;
}

}  // namespace granule
