#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "pcode/error.hpp"

namespace pcode {

using Point = std::uint16_t;

/// A bijection on the points {0, ..., degree-1}, stored as its image array:
/// images()[i] is the image of point i.
///
/// Composition follows the right-action convention: (p * q) maps i to
/// q.apply(p.apply(i)), i.e. p acts first. Conjugation p.conjugated_by(x)
/// is x^-1 * p * x under the same convention.
///
/// Text form is disjoint-cycle notation with 1-based points, e.g.
/// "(1 2 3)(4 5)"; the identity prints as "()".
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
        validate();
    }

    static Permutation identity(std::size_t degree) {
        std::vector<Point> img(degree);
        std::iota(img.begin(), img.end(), Point{0});
        return Permutation(unchecked{}, std::move(img));
    }

    /// One transposition (a b), 0-based points, as a degree-n permutation.
    static Permutation transposition(std::size_t degree, Point a, Point b) {
        require(a < degree && b < degree, ErrorCode::InvalidInput, "transposition point out of range");
        Permutation p = identity(degree);
        std::swap(p.images_[a], p.images_[b]);
        return p;
    }

    /// Cycle through the 0-based points of `cycle`, identity elsewhere.
    static Permutation from_cycle(std::size_t degree, const std::vector<Point>& cycle) {
        Permutation p = identity(degree);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            Point from = cycle[i];
            Point to = cycle[(i + 1) % cycle.size()];
            require(from < degree, ErrorCode::InvalidInput, "cycle point out of range");
            p.images_[from] = to;
        }
        p.validate();
        return p;
    }

    std::size_t degree() const { return images_.size(); }
    const std::vector<Point>& images() const { return images_; }

    Point apply(Point i) const { return images_[i]; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    bool is_involution() const { return !is_identity() && (*this * *this).is_identity(); }

    /// p * q: apply p first, then q.
    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        std::vector<Point> img(p.degree());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = q.images_[p.images_[i]];
        return Permutation(unchecked{}, std::move(img));
    }

    Permutation inverse() const {
        std::vector<Point> img(degree());
        for (std::size_t i = 0; i < img.size(); ++i) img[images_[i]] = static_cast<Point>(i);
        return Permutation(unchecked{}, std::move(img));
    }

    Permutation conjugated_by(const Permutation& x) const { return x.inverse() * (*this * x); }

    std::uint64_t order() const {
        std::uint64_t result = 1;
        std::vector<bool> seen(degree(), false);
        for (std::size_t i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            std::uint64_t len = 0;
            for (std::size_t j = i; !seen[j]; j = images_[j]) {
                seen[j] = true;
                ++len;
            }
            result = std::lcm(result, len);
        }
        return result;
    }

    /// Moved-point cycles, each rotated to start at its smallest point,
    /// sorted by that point. Fixed points are omitted.
    std::vector<std::vector<Point>> cycles() const {
        std::vector<std::vector<Point>> result;
        std::vector<bool> seen(degree(), false);
        for (std::size_t i = 0; i < degree(); ++i) {
            if (seen[i] || images_[i] == i) continue;
            std::vector<Point> cycle;
            for (std::size_t j = i; !seen[j]; j = images_[j]) {
                seen[j] = true;
                cycle.push_back(static_cast<Point>(j));
            }
            result.push_back(std::move(cycle));
        }
        return result;
    }

    std::string to_cycle_string() const {
        auto cs = cycles();
        if (cs.empty()) return "()";
        std::string out;
        for (const auto& cycle : cs) {
            out += '(';
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (i) out += ' ';
                out += std::to_string(cycle[i] + 1);
            }
            out += ')';
        }
        return out;
    }

    /// Parse disjoint-cycle notation with 1-based points. Every point must be
    /// in [1, degree]; a point may appear in at most one cycle.
    static Permutation parse(const std::string& text, std::size_t degree) {
        std::vector<Point> img(degree);
        std::iota(img.begin(), img.end(), Point{0});
        std::vector<bool> used(degree, false);

        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
                ++pos;
        };
        skip_ws();
        bool any_cycle = false;
        while (pos < text.size()) {
            require(text[pos] == '(', ErrorCode::ParseError, "expected '(' in \"" + text + "\"");
            ++pos;
            std::vector<Point> cycle;
            skip_ws();
            while (pos < text.size() && text[pos] != ')') {
                require(std::isdigit(static_cast<unsigned char>(text[pos])), ErrorCode::ParseError,
                        "expected point number in \"" + text + "\"");
                unsigned long value = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
                    ++pos;
                }
                require(value >= 1 && value <= degree, ErrorCode::ParseError,
                        "point " + std::to_string(value) + " out of range 1.." + std::to_string(degree));
                Point pt = static_cast<Point>(value - 1);
                require(!used[pt], ErrorCode::ParseError,
                        "point " + std::to_string(value) + " repeated in \"" + text + "\"");
                used[pt] = true;
                cycle.push_back(pt);
                skip_ws();
            }
            require(pos < text.size(), ErrorCode::ParseError, "unterminated cycle in \"" + text + "\"");
            ++pos; // ')'
            require(cycle.size() != 1, ErrorCode::ParseError, "singleton cycle in \"" + text + "\"");
            for (std::size_t i = 0; i < cycle.size(); ++i)
                img[cycle[i]] = cycle[(i + 1) % cycle.size()];
            any_cycle = true;
            skip_ws();
        }
        require(any_cycle, ErrorCode::ParseError, "empty permutation text");
        return Permutation(unchecked{}, std::move(img));
    }

    /// Largest 1-based point mentioned in cycle notation; 0 for "()".
    static std::size_t max_point(const std::string& text) {
        std::size_t best = 0;
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::size_t value = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
                best = std::max(best, value);
            } else {
                ++pos;
            }
        }
        return best;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return a.images_ != b.images_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

private:
    struct unchecked {};
    Permutation(unchecked, std::vector<Point> images) : images_(std::move(images)) {}

    void validate() const {
        std::vector<bool> seen(images_.size(), false);
        for (Point v : images_) {
            require(v < images_.size(), ErrorCode::InvalidInput, "image out of range");
            require(!seen[v], ErrorCode::InvalidInput, "image array is not a bijection");
            seen[v] = true;
        }
    }

    std::vector<Point> images_;
};

inline Permutation perm_power(Permutation base, std::uint64_t e) {
    Permutation acc = Permutation::identity(base.degree());
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        for (Point v : p.images()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace pcode
