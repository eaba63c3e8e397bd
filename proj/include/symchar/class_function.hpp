#pragma once

#include <map>

#include "symchar/bigint.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// Exact integer-valued class function on S_m, stored as a total map from
/// cycle types (all p(m) partitions of m) to values.
class ClassFunction {
public:
    /// The zero function on S_m; entries for every class are created up front
    /// so the domain is total by construction.
    explicit ClassFunction(int degree_n);

    int degree_n() const { return degree_n_; }
    const std::map<Partition, BigInt, DescLex>& values() const { return values_; }

    /// Checked access: the key must be a partition of degree_n.
    BigInt& operator[](const Partition& class_type);
    const BigInt& at(const Partition& class_type) const;

    ClassFunction& operator+=(const ClassFunction& other);
    ClassFunction& operator*=(const BigInt& scalar);

private:
    int degree_n_;
    std::map<Partition, BigInt, DescLex> values_;
};

}  // namespace symchar
