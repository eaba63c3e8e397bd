#include "symchar/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

namespace symchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw ContractError("partition parts must be positive, got " +
                                std::to_string(parts_[i]));
        }
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
            throw ContractError("partition parts must be weakly decreasing");
        }
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::ones(int n) {
    if (n < 0) throw ContractError("ones(n) requires n >= 0");
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

std::size_t PartitionHash::operator()(const Partition& p) const {
    std::size_t seed = p.parts().size();
    for (int v : p.parts()) {
        seed ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw ContractError("enumerate_partitions requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    // Descending-lex order falls out of always trying the largest next part first.
    std::function<void(int, int)> emit = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            emit(remaining - part, part);
            current.pop_back();
        }
    };
    emit(n, n);
    return out;
}

BigInt centralizer_order(const Partition& lambda) {
    BigInt z = 1;
    const auto& parts = lambda.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const unsigned long multiplicity = static_cast<unsigned long>(j - i);
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), multiplicity);
        z *= power * factorial(multiplicity);
        i = j;
    }
    return z;
}

BigInt class_size(const Partition& lambda) {
    const auto n = static_cast<unsigned long>(lambda.weight());
    return checked_div(factorial(n), centralizer_order(lambda), "class_size");
}

std::vector<Partition> inner_corners(const Partition& lambda) {
    if (lambda.weight() < 1) throw ContractError("inner_corners requires weight >= 1");
    const auto& parts = lambda.parts();
    std::vector<Partition> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool removable = (i + 1 == parts.size()) || parts[i] > parts[i + 1];
        if (!removable) continue;
        std::vector<int> next = parts;
        next[i] -= 1;
        if (next[i] == 0) next.pop_back();
        out.emplace_back(std::move(next));
    }
    return out;
}

std::vector<Partition> outer_corners(const Partition& lambda) {
    const auto& parts = lambda.parts();
    std::vector<Partition> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool addable = (i == 0) || parts[i] < parts[i - 1];
        if (!addable) continue;
        std::vector<int> next = parts;
        next[i] += 1;
        out.emplace_back(std::move(next));
    }
    std::vector<int> extended = parts;
    extended.push_back(1);
    out.emplace_back(std::move(extended));
    return out;
}

std::vector<int> beta_numbers(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const int rows = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < rows; ++i) beta[i] = parts[i] + (rows - 1 - i);
    return beta;
}

std::vector<RimHookRemoval> rim_hooks(const Partition& lambda, int k) {
    if (k < 1) throw ContractError("rim_hooks requires k >= 1");
    std::vector<RimHookRemoval> out;
    const std::vector<int> beta = beta_numbers(lambda);
    const int rows = static_cast<int>(beta.size());
    if (rows == 0) return out;

    std::vector<char> occupied(static_cast<std::size_t>(beta[0]) + 1, 0);
    for (int b : beta) occupied[static_cast<std::size_t>(b)] = 1;

    for (int i = 0; i < rows; ++i) {
        const int target = beta[i] - k;
        if (target < 0) break;  // beta is strictly decreasing
        if (occupied[static_cast<std::size_t>(target)]) continue;

        // Rows spanned by the hook = occupied values jumped over, plus one.
        int leg = 0;
        for (int j = i + 1; j < rows && beta[j] > target; ++j) ++leg;

        std::vector<int> moved = beta;
        moved[i] = target;
        std::sort(moved.rbegin(), moved.rend());
        std::vector<int> parts;
        parts.reserve(moved.size());
        for (int j = 0; j < rows; ++j) {
            const int part = moved[j] - (rows - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        out.push_back(RimHookRemoval{Partition(std::move(parts)), leg});
    }
    return out;
}

}  // namespace symchar
