#include "qmet/dist_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "qmet/errors.hpp"
#include "qmet/rational.hpp"

namespace qmet {

DistMatrix::DistMatrix(std::vector<std::string> labels, std::vector<std::vector<Magnitude>> d)
    : labels_(std::move(labels)), d_(std::move(d)) {
    const size_t n = labels_.size();
    if (n == 0) throw std::invalid_argument("dist matrix: needs at least one point");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw std::invalid_argument("dist matrix: empty label");
        if (!seen.insert(l).second) throw std::invalid_argument("dist matrix: duplicate label '" + l + "'");
    }
    if (d_.size() != n) throw std::invalid_argument("dist matrix: row count mismatch");
    for (size_t i = 0; i < n; ++i) {
        if (d_[i].size() != n) throw std::invalid_argument("dist matrix: column count mismatch");
        if (!d_[i][i].is_zero())
            throw std::invalid_argument("dist matrix: nonzero diagonal at '" + labels_[i] + "'");
        for (size_t j = i + 1; j < n; ++j) {
            if (!(d_[i][j] == d_[j][i]))
                throw std::invalid_argument("dist matrix: asymmetric at '" + labels_[i] + "','" + labels_[j] + "'");
            if (!(d_[i][j] > Magnitude()))
                throw std::invalid_argument("dist matrix: non-positive distance at '" + labels_[i] + "','" +
                                            labels_[j] + "'");
        }
    }
}

const Magnitude& DistMatrix::at(const std::string& x, const std::string& y) const {
    return d_[index_of(x)][index_of(y)];
}

size_t DistMatrix::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("dist matrix: unknown label '" + label + "'");
    return static_cast<size_t>(it - labels_.begin());
}

bool DistMatrix::has_label(const std::string& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

double DistMatrix::tolerance() const {
    double t = 0;
    for (const auto& row : d_)
        for (const auto& e : row) t = std::max(t, e.rel_tol());
    return t;
}

DistMatrix DistMatrix::parse(std::istream& in) {
    size_t n = 0;
    if (!(in >> n) || n == 0) throw ParseError("dist matrix: bad point count");
    std::vector<std::string> labels(n);
    std::vector<std::vector<Magnitude>> d(n);
    for (size_t i = 0; i < n; ++i) {
        if (!(in >> labels[i])) throw ParseError("dist matrix: missing label in row " + std::to_string(i));
        d[i].reserve(n);
        for (size_t j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw ParseError("dist matrix: missing entry in row '" + labels[i] + "'");
            Rational r = Rational::parse(tok);
            if (r.is_negative()) throw ParseError("dist matrix: negative entry in row '" + labels[i] + "'");
            d[i].emplace_back(r);
        }
    }
    try {
        return DistMatrix(std::move(labels), std::move(d));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

DistMatrix DistMatrix::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("dist matrix: cannot open '" + path + "'");
    return parse(in);
}

namespace {

// entries must re-parse: exact rationals as a/b, anything else as a plain
// fixed-point decimal (no exponent notation)
std::string entry_str(const Magnitude& m) {
    if (m.is_rational()) return m.rational().str();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17f", m.to_double());
    std::string s(buf);
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

}  // namespace

void DistMatrix::emit(std::ostream& out) const {
    out << size() << "\n";
    for (size_t i = 0; i < size(); ++i) {
        out << labels_[i];
        for (size_t j = 0; j < size(); ++j) out << " " << entry_str(d_[i][j]);
        out << "\n";
    }
}

std::string DistMatrix::emit_str() const {
    std::ostringstream os;
    emit(os);
    return os.str();
}

}  // namespace qmet
