#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "symchar/bigint.hpp"

namespace symchar {

/// Canonical integer partition: a weakly decreasing list of positive parts.
/// The empty list is the unique partition of 0. A Partition doubles as an
/// irreducible-character label and as a conjugacy-class (cycle-type) label
/// for the symmetric group on `weight()` points.
///
/// Immutable after construction and safe to share across threads.
class Partition {
public:
    Partition() = default;

    /// Validates canonical form: every part >= 1, weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// The column partition (1^n).
    static Partition ones(int n);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    bool operator==(const Partition& other) const = default;
    /// Lexicographic on the part lists, so (4) > (3,1) > (2,2) > ... > (1,1,1,1).
    auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

    /// Display form: "(5,3,2,2,1)"; the empty partition prints as "()".
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Map comparator giving the canonical output order: descending lexicographic,
/// from (n) down to (1^n).
struct DescLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const;
};

/// One legal removal of a rim hook from some source shape: the partition left
/// behind and the leg length (rows spanned by the hook, minus one).
struct RimHookRemoval {
    Partition result;
    int leg_length = 0;

    bool operator==(const RimHookRemoval&) const = default;
};

/// All partitions of n in descending lexicographic order; first entry is (n),
/// last is (1^n). The count is p(n).
std::vector<Partition> enumerate_partitions(int n);

/// |K_lambda|: the number of elements of S_n with cycle type lambda,
/// n = lambda.weight(). Equals n!/z_lambda.
BigInt class_size(const Partition& lambda);

/// z_lambda = prod_i i^{m_i} m_i! over part multiplicities m_i: the order of
/// the centralizer of any element of cycle type lambda.
BigInt centralizer_order(const Partition& lambda);

/// Shapes obtained by deleting one removable node, ordered by row.
/// Requires weight >= 1.
std::vector<Partition> inner_corners(const Partition& lambda);

/// Shapes obtained by adding one addable node, ordered by row. The count is
/// always (number of distinct part sizes) + 1.
std::vector<Partition> outer_corners(const Partition& lambda);

/// First-column hook lengths beta_i = lambda_i + (rows - i), strictly
/// decreasing. Rim-hook removal is bead movement on this set: subtracting k
/// from one beta is legal iff the target value is free, and the leg length is
/// the number of occupied values jumped over.
std::vector<int> beta_numbers(const Partition& lambda);

/// Every legal removal of a rim k-hook from lambda, ordered by the row index
/// of the hook's top node. Empty when lambda has no k-hook. Requires k >= 1.
std::vector<RimHookRemoval> rim_hooks(const Partition& lambda, int k);

}  // namespace symchar
