#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "isorep/errors.hpp"
#include "isorep/metric.hpp"

namespace isorep {

/// A distance-preserving permutation of point indices, in image notation:
/// perm[i] is where point i goes.
struct Isometry {
    std::vector<int> perm;

    int size() const { return static_cast<int>(perm.size()); }
    int operator()(int i) const { return perm[i]; }
    bool operator==(const Isometry& other) const { return perm == other.perm; }

    bool is_identity() const;
    /// "[1,0,2]"
    std::string to_string() const;
};

/// Raw permutation arithmetic: (g∘h)(i) = g(h(i)). Throws MismatchedSpaces
/// on size mismatch.
Isometry compose_perms(const Isometry& g, const Isometry& h);
Isometry invert_perm(const Isometry& g);

/// The full isometry group of a finite metric space, eagerly materialized.
///
/// Element 0 is the identity; the rest are sorted lexicographically by
/// image vector. Closed under composition and inverse by construction.
/// Immutable and cheap to copy.
class IsometryGroup {
public:
    /// Finds all distance-preserving permutations by backtracking over point
    /// assignments, pruning candidates whose sorted distance multiset does
    /// not match (within the space's tolerance). Throws SearchBudgetExceeded
    /// if the space has more than max_points points.
    static IsometryGroup search(const FiniteMetricSpace& space,
                                int max_points = 64);

    const FiniteMetricSpace& space() const { return impl_->space; }
    int order() const { return static_cast<int>(impl_->elements.size()); }
    const std::vector<Isometry>& elements() const { return impl_->elements; }
    const Isometry& element(int idx) const;
    const Isometry& identity() const { return impl_->elements[0]; }

    /// Index of g in the element list; throws UnknownElement.
    int index_of(const Isometry& g) const;
    bool contains(const Isometry& g) const;

    /// Group law on stored elements. Results are looked up in the element
    /// list, so closure is verified on every call.
    const Isometry& compose(const Isometry& g, const Isometry& h) const;
    const Isometry& inverse(const Isometry& g) const;

    /// Index-based group law for hot paths.
    int compose_index(int gi, int hi) const;
    int inverse_index(int gi) const { return impl_->inverses.at(gi); }

    /// Identity of the underlying group object (same search result).
    bool same_group(const IsometryGroup& other) const { return impl_ == other.impl_; }

private:
    struct Impl {
        FiniteMetricSpace space;
        std::vector<Isometry> elements;
        std::vector<int> inverses;
        // perm -> element index, keyed by the image vector
        struct VecHash {
            std::size_t operator()(const std::vector<int>& v) const;
        };
        std::unordered_map<std::vector<int>, int, VecHash> index;

        explicit Impl(FiniteMetricSpace s) : space(std::move(s)) {}
    };
    explicit IsometryGroup(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// Computes Is(space): every permutation g with d(g(i), g(j)) = d(i, j)
/// within the space's tolerance.
IsometryGroup isometry_group(const FiniteMetricSpace& space, int max_points = 64);

}  // namespace isorep
