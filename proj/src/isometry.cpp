#include "isorep/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace isorep {

bool Isometry::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (perm[i] != i) return false;
    return true;
}

std::string Isometry::to_string() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += std::to_string(perm[i]);
    }
    return s + "]";
}

Isometry compose_perms(const Isometry& g, const Isometry& h) {
    if (g.size() != h.size()) throw MismatchedSpaces();
    Isometry out;
    out.perm.resize(g.size());
    for (int i = 0; i < g.size(); ++i) out.perm[i] = g.perm[h.perm[i]];
    return out;
}

Isometry invert_perm(const Isometry& g) {
    Isometry out;
    out.perm.resize(g.size());
    for (int i = 0; i < g.size(); ++i) out.perm[g.perm[i]] = i;
    return out;
}

std::size_t IsometryGroup::Impl::VecHash::operator()(
    const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

IsometryGroup::IsometryGroup(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

namespace {

class Search {
public:
    Search(const FiniteMetricSpace& space) : space_(space), n_(space.size()) {
        // For each point, its sorted multiset of distances to all points.
        signatures_.resize(n_);
        for (int i = 0; i < n_; ++i) {
            signatures_[i].reserve(n_);
            for (int j = 0; j < n_; ++j) signatures_[i].push_back(space.dist(i, j));
            std::sort(signatures_[i].begin(), signatures_[i].end());
        }
        tol_ = space.tolerance();
    }

    std::vector<Isometry> run() {
        assigned_.assign(n_, -1);
        used_.assign(n_, false);
        extend(0);
        return std::move(found_);
    }

private:
    bool signatures_match(int i, int j) const {
        for (int t = 0; t < n_; ++t)
            if (std::abs(signatures_[i][t] - signatures_[j][t]) > tol_) return false;
        return true;
    }

    void extend(int depth) {
        if (depth == n_) {
            found_.push_back(Isometry{assigned_});
            return;
        }
        for (int j = 0; j < n_; ++j) {
            if (used_[j] || !signatures_match(depth, j)) continue;
            bool ok = true;
            for (int x = 0; x < depth && ok; ++x)
                if (std::abs(space_.dist(x, depth) - space_.dist(assigned_[x], j)) > tol_)
                    ok = false;
            if (!ok) continue;
            assigned_[depth] = j;
            used_[j] = true;
            extend(depth + 1);
            used_[j] = false;
            assigned_[depth] = -1;
        }
    }

    const FiniteMetricSpace& space_;
    int n_;
    double tol_ = 0.0;
    std::vector<std::vector<double>> signatures_;
    std::vector<int> assigned_;
    std::vector<bool> used_;
    std::vector<Isometry> found_;
};

}  // namespace

IsometryGroup IsometryGroup::search(const FiniteMetricSpace& space,
                                    int max_points) {
    if (space.size() > max_points) throw SearchBudgetExceeded(space.size());
    auto impl = std::make_shared<Impl>(space);
    impl->elements = Search(space).run();
    // Candidates are tried in increasing order, so elements come out in
    // lexicographic order with the identity first; sort anyway to pin it.
    std::sort(impl->elements.begin(), impl->elements.end(),
              [](const Isometry& a, const Isometry& b) { return a.perm < b.perm; });
    for (int i = 0; i < static_cast<int>(impl->elements.size()); ++i)
        impl->index.emplace(impl->elements[i].perm, i);
    impl->inverses.resize(impl->elements.size());
    for (int i = 0; i < static_cast<int>(impl->elements.size()); ++i) {
        const auto inv = invert_perm(impl->elements[i]);
        const auto it = impl->index.find(inv.perm);
        if (it == impl->index.end())
            throw Error("search produced a set that is not inverse-closed");
        impl->inverses[i] = it->second;
    }
    return IsometryGroup(std::move(impl));
}

const Isometry& IsometryGroup::element(int idx) const {
    if (idx < 0 || idx >= order()) throw IndexOutOfRange(idx);
    return impl_->elements[idx];
}

int IsometryGroup::index_of(const Isometry& g) const {
    const auto it = impl_->index.find(g.perm);
    if (it == impl_->index.end()) throw UnknownElement();
    return it->second;
}

bool IsometryGroup::contains(const Isometry& g) const {
    return impl_->index.count(g.perm) > 0;
}

const Isometry& IsometryGroup::compose(const Isometry& g, const Isometry& h) const {
    if (g.size() != space().size() || h.size() != space().size())
        throw MismatchedSpaces();
    return impl_->elements[compose_index(index_of(g), index_of(h))];
}

const Isometry& IsometryGroup::inverse(const Isometry& g) const {
    return impl_->elements[inverse_index(index_of(g))];
}

int IsometryGroup::compose_index(int gi, int hi) const {
    const auto& g = element(gi);
    const auto& h = element(hi);
    const auto it = impl_->index.find(compose_perms(g, h).perm);
    if (it == impl_->index.end())
        throw Error("group is not closed under composition");
    return it->second;
}

IsometryGroup isometry_group(const FiniteMetricSpace& space, int max_points) {
    return IsometryGroup::search(space, max_points);
}

}  // namespace isorep
