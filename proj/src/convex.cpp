#include "gptd/convex.hpp"

#include <stdexcept>

namespace gptd {

namespace {

Rat coordinate_sum(const std::vector<Rat>& coords) {
    Rat sum;
    for (const Rat& c : coords) sum += c;
    return sum;
}

}  // namespace

RPoint::RPoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw std::invalid_argument("RPoint: dimension must be positive");
    }
    if (coordinate_sum(coords_) != Rat(1)) {
        throw std::invalid_argument("RPoint: coordinates must sum to exactly 1");
    }
}

std::string RPoint::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) out += ", ";
        out += coords_[i].str();
    }
    out += ")";
    return out;
}

RPoint simplex_vertex(int j, int n) {
    if (n < 1) throw std::invalid_argument("simplex_vertex: dimension must be positive");
    if (j < 1 || j > n) throw std::out_of_range("simplex_vertex: index out of range");
    std::vector<Rat> coords(static_cast<std::size_t>(n), Rat(0));
    coords[static_cast<std::size_t>(j - 1)] = Rat(1);
    return RPoint(std::move(coords));
}

std::vector<Rat> indicator(const IndexSubset& subset, int n) {
    if (subset.ground_size() != n) {
        throw std::invalid_argument("indicator: subset ground set does not match dimension");
    }
    std::vector<Rat> coords(static_cast<std::size_t>(n), Rat(0));
    for (int j : subset.elements()) coords[static_cast<std::size_t>(j - 1)] = Rat(1);
    return coords;
}

RPoint project(const RPoint& point, int m) {
    const int n = point.dimension();
    if (m < 1 || m > n) throw std::invalid_argument("project: target dimension out of range");
    if (m == n) return point;
    Rat tail;  // t_{m+1} + ... + t_n
    for (int i = m; i < n; ++i) tail += point[i];
    const Rat r = tail / Rat(m);
    std::vector<Rat> coords;
    coords.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) coords.push_back(point[i] + r);
    return RPoint(std::move(coords));
}

bool in_simplex(const RPoint& point) {
    for (const Rat& c : point.coords()) {
        if (c.sign() < 0) return false;
    }
    return true;
}

RPoint convex_combination(const std::vector<RPoint>& points, const std::vector<Rat>& weights) {
    if (points.empty() || points.size() != weights.size()) {
        throw std::invalid_argument("convex_combination: points/weights size mismatch");
    }
    const int n = points.front().dimension();
    Rat weight_sum;
    for (const Rat& w : weights) {
        if (w.sign() < 0) throw std::invalid_argument("convex_combination: negative weight");
        weight_sum += w;
    }
    if (weight_sum != Rat(1)) {
        throw std::invalid_argument("convex_combination: weights must sum to exactly 1");
    }
    std::vector<Rat> coords(static_cast<std::size_t>(n), Rat(0));
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (points[k].dimension() != n) {
            throw std::invalid_argument("convex_combination: mixed dimensions");
        }
        for (int i = 0; i < n; ++i) {
            coords[static_cast<std::size_t>(i)] += weights[k] * points[k][i];
        }
    }
    return RPoint(std::move(coords));
}

StateSpace::StateSpace(int n, std::vector<RPoint> generators, std::vector<std::string> labels)
    : n_(n), generators_(std::move(generators)), labels_(std::move(labels)) {
    if (n_ < 1) throw std::invalid_argument("StateSpace: dimension must be positive");
    if (generators_.empty()) {
        throw std::invalid_argument("StateSpace: generator list must be non-empty");
    }
    for (const RPoint& g : generators_) {
        if (g.dimension() != n_) {
            throw std::invalid_argument("StateSpace: generator dimension mismatch");
        }
    }
    if (labels_.empty()) {
        labels_.assign(generators_.size(), std::string{});
    } else if (labels_.size() != generators_.size()) {
        throw std::invalid_argument("StateSpace: label count must match generator count");
    }
}

}  // namespace gptd
