#include "qmet/normed_space.hpp"

#include <stdexcept>

namespace qmet {

NormedSpace::NormedSpace(AbsoluteValue scalar, unsigned dim) : scalar_(std::move(scalar)), dim_(dim) {
    if (dim == 0) throw std::invalid_argument("normed space: dimension must be positive");
}

void NormedSpace::check_dim(const Vec& v) const {
    if (v.size() != dim_) throw std::invalid_argument("normed space: vector dimension mismatch");
}

Magnitude NormedSpace::norm(const Vec& v) const {
    check_dim(v);
    Magnitude m;
    for (const auto& c : v) m = Magnitude::max(m, abs_eval(scalar_, c));
    return m;
}

Vec NormedSpace::add(const Vec& a, const Vec& b) const {
    check_dim(a);
    check_dim(b);
    Vec r(dim_);
    for (unsigned i = 0; i < dim_; ++i) r[i] = a[i] + b[i];
    return r;
}

Vec NormedSpace::sub(const Vec& a, const Vec& b) const {
    check_dim(a);
    check_dim(b);
    Vec r(dim_);
    for (unsigned i = 0; i < dim_; ++i) r[i] = a[i] - b[i];
    return r;
}

Vec NormedSpace::scale(const Rational& t, const Vec& v) const {
    check_dim(v);
    Vec r(dim_);
    for (unsigned i = 0; i < dim_; ++i) r[i] = t * v[i];
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace qmet
