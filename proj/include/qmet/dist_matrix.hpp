#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qmet/magnitude.hpp"

namespace qmet {

/// Labeled finite symmetric distance matrix with zero diagonal and positive
/// off-diagonal entries.  Entries are magnitudes: exact rationals in the
/// common case, tolerance-carrying floats after irrational transforms.
class DistMatrix {
public:
    DistMatrix(std::vector<std::string> labels, std::vector<std::vector<Magnitude>> d);

    size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Magnitude& at(size_t i, size_t j) const { return d_[i][j]; }
    const Magnitude& at(const std::string& x, const std::string& y) const;
    size_t index_of(const std::string& label) const;
    bool has_label(const std::string& label) const;

    /// Largest relative tolerance carried by any entry; 0 for all-exact.
    double tolerance() const;

    /// Text format: first line n, then n lines of "label e_1 ... e_n" with
    /// rational or decimal entries.
    static DistMatrix parse(std::istream& in);
    static DistMatrix parse_file(const std::string& path);
    void emit(std::ostream& out) const;
    std::string emit_str() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Magnitude>> d_;
};

}  // namespace qmet
