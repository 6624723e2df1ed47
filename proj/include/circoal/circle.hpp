#ifndef CIRCOAL_CIRCLE_HPP
#define CIRCOAL_CIRCLE_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace circoal {

// A point on the unit-circumference circle, identified with [0, 1).
// Construction reduces any real modulo 1. Comparisons use the exact
// floating-point representative; there is no epsilon anywhere in the
// geometry, coincidence handling belongs to the callers.
class CirclePoint {
public:
    CirclePoint() = default;
    explicit CirclePoint(double x) : pos_(wrap(x)) {}

    double value() const { return pos_; }

    static double wrap(double x) {
        double r = x - std::floor(x);
        return r < 1.0 ? r : 0.0; // rounding can push x - floor(x) to 1.0
    }

    friend bool operator==(CirclePoint a, CirclePoint b) { return a.pos_ == b.pos_; }
    friend bool operator!=(CirclePoint a, CirclePoint b) { return a.pos_ != b.pos_; }
    friend bool operator<(CirclePoint a, CirclePoint b) { return a.pos_ < b.pos_; }

private:
    double pos_ = 0.0;
};

// Length of the anticlockwise arc [u, v); zero when u == v.
inline double arc_length(CirclePoint u, CirclePoint v) {
    double d = v.value() - u.value();
    return d < 0.0 ? d + 1.0 : d;
}

// Membership in the half-open anticlockwise arc [u, v). The arc [u, u) is
// empty by convention, so coincident endpoints never capture a point.
inline bool in_arc(CirclePoint e, CirclePoint u, CirclePoint v) {
    if (u == v) return false;
    return arc_length(u, e) < arc_length(u, v);
}

// Strict membership in the open anticlockwise arc (u, v).
inline bool in_open_arc(CirclePoint e, CirclePoint u, CirclePoint v) {
    if (u == v) return false;
    const double d = arc_length(u, e);
    return d > 0.0 && d < arc_length(u, v);
}

// Anticlockwise arc lengths between consecutive circle points; always sums
// to 1 (a single point owns the whole circle).
class GapVector {
public:
    static constexpr double kSumTolerance = 1e-12;

    static GapVector from(std::vector<double> gaps) {
        if (gaps.empty()) throw std::invalid_argument("GapVector: no gaps");
        double sum = 0.0;
        for (double g : gaps) {
            if (!(g > 0.0)) throw std::invalid_argument("GapVector: gaps must be positive");
            sum += g;
        }
        if (std::abs(sum - 1.0) > kSumTolerance)
            throw std::invalid_argument("GapVector: gaps must sum to 1");
        GapVector v;
        v.gaps_ = std::move(gaps);
        return v;
    }

    static GapVector equal_spacing(int m) {
        if (m < 1) throw std::invalid_argument("GapVector: m must be >= 1");
        return from(std::vector<double>(static_cast<std::size_t>(m), 1.0 / m));
    }

    std::size_t size() const { return gaps_.size(); }
    double operator[](std::size_t i) const { return gaps_[i]; }
    const std::vector<double>& values() const { return gaps_; }

    // Circle points at 0, g1, g1+g2, ... realizing these gaps.
    std::vector<CirclePoint> points(double origin = 0.0) const {
        std::vector<CirclePoint> pts;
        pts.reserve(gaps_.size());
        double x = origin;
        for (double g : gaps_) {
            pts.emplace_back(x);
            x += g;
        }
        return pts;
    }

private:
    GapVector() = default;
    std::vector<double> gaps_;
};

struct SortedCircle {
    std::vector<CirclePoint> points; // anticlockwise from the smallest representative
    GapVector gaps;                  // gaps[i] = arc from points[i] to points[i+1 mod m]
};

// Sorts pairwise-distinct points into anticlockwise order starting from the
// smallest representative and returns the induced gap vector. Duplicates are
// a degenerate configuration and rejected; merge semantics belong upstream.
inline SortedCircle circular_sort(std::span<const CirclePoint> points) {
    if (points.empty()) throw std::invalid_argument("circular_sort: no points");
    std::vector<CirclePoint> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw std::invalid_argument("circular_sort: duplicate points");

    const std::size_t m = sorted.size();
    std::vector<double> gaps(m);
    for (std::size_t i = 0; i + 1 < m; ++i) gaps[i] = sorted[i + 1].value() - sorted[i].value();
    gaps[m - 1] = m == 1 ? 1.0 : sorted[0].value() + 1.0 - sorted[m - 1].value();
    return SortedCircle{std::move(sorted), GapVector::from(std::move(gaps))};
}

} // namespace circoal

#endif
