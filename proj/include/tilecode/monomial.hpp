#pragma once

#include <string>
#include <vector>

#include "tilecode/errors.hpp"

namespace tilecode {

/// A point of the integer lattice Z^N written multiplicatively: the vector
/// (l_1, ..., l_N) stands for the monomial x_1^{l_1} ... x_N^{l_N}.
/// Immutable value type; all arithmetic is exact exponent arithmetic.
class Monomial {
public:
    explicit Monomial(int dim) : exps_(static_cast<std::size_t>(check_dim(dim)), 0) {}
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
        check_dim(static_cast<int>(exps_.size()));
    }

    static Monomial identity(int dim) { return Monomial(dim); }

    /// e = x_1 x_2 ... x_N, the all-ones vector.
    static Monomial ones(int dim) {
        Monomial m(dim);
        for (auto& v : m.exps_) v = 1;
        return m;
    }

    static Monomial axis(int dim, int index) {
        Monomial m(dim);
        m.exps_.at(static_cast<std::size_t>(index)) = 1;
        return m;
    }

    int dim() const { return static_cast<int>(exps_.size()); }
    int exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return exps_; }

    int exponent_sum() const {
        int s = 0;
        for (int v : exps_) s += v;
        return s;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        same_dim(o);
        for (int i = 0; i < dim(); ++i) r.exps_[static_cast<std::size_t>(i)] += o.exps_[static_cast<std::size_t>(i)];
        return r;
    }

    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        same_dim(o);
        for (int i = 0; i < dim(); ++i) r.exps_[static_cast<std::size_t>(i)] -= o.exps_[static_cast<std::size_t>(i)];
        return r;
    }

    Monomial times_axis(int i) const {
        Monomial r = *this;
        r.exps_.at(static_cast<std::size_t>(i)) += 1;
        return r;
    }

    /// Translation by e^k: adds k to every exponent.
    Monomial e_translated(int k) const {
        Monomial r = *this;
        for (auto& v : r.exps_) v += k;
        return r;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

    /// Multiplicative text form: "1", "zw", "xz2w", "x^-1y3". Positive
    /// exponents are printed as bare digits, negative ones with '^'.
    std::string str() const;

private:
    static int check_dim(int dim) {
        if (dim < 2) throw DimensionMismatch("dimension must be at least 2, got " + std::to_string(dim));
        return dim;
    }
    void same_dim(const Monomial& o) const {
        if (o.dim() != dim())
            throw DimensionMismatch("operands have dimensions " + std::to_string(dim()) +
                                    " and " + std::to_string(o.dim()));
    }

    std::vector<int> exps_;
};

/// Axis display names: x, y, z, w for N <= 4, x1..xN otherwise.
std::string axis_name(int dim, int index);

} // namespace tilecode
