#include "symchar/class_function.hpp"

namespace symchar {

ClassFunction::ClassFunction(int degree_n) : degree_n_(degree_n) {
    if (degree_n < 1) throw ContractError("ClassFunction requires degree_n >= 1");
    for (const Partition& cls : enumerate_partitions(degree_n)) {
        values_.emplace(cls, BigInt(0));
    }
}

BigInt& ClassFunction::operator[](const Partition& class_type) {
    auto it = values_.find(class_type);
    if (it == values_.end()) {
        throw ContractError("not a class of S_" + std::to_string(degree_n_) + ": " +
                            class_type.to_string());
    }
    return it->second;
}

const BigInt& ClassFunction::at(const Partition& class_type) const {
    auto it = values_.find(class_type);
    if (it == values_.end()) {
        throw ContractError("not a class of S_" + std::to_string(degree_n_) + ": " +
                            class_type.to_string());
    }
    return it->second;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
    if (degree_n_ != other.degree_n_) {
        throw ContractError("degree mismatch in class-function addition");
    }
    auto it = values_.begin();
    auto jt = other.values_.begin();
    for (; it != values_.end(); ++it, ++jt) it->second += jt->second;
    return *this;
}

ClassFunction& ClassFunction::operator*=(const BigInt& scalar) {
    for (auto& [cls, value] : values_) value *= scalar;
    return *this;
}

}  // namespace symchar
