#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "pcode/constructions.hpp"

namespace pcode {

/// Generalized quaternion group of order 4m (m >= 2) in its regular
/// representation: <a, b | a^(2m) = e, b^2 = a^m, a^b = a^-1>.
inline PermGroup generalized_quaternion(std::size_t m) {
    require(m >= 2, ErrorCode::ParameterOutOfRange, "quaternion order is 4m with m >= 2");
    const std::size_t n = 4 * m;
    auto index = [&](std::size_t i, std::size_t j) { return i + 2 * m * j; };
    std::vector<Point> a_img(n), b_img(n);
    for (std::size_t i = 0; i < 2 * m; ++i) {
        a_img[index(i, 0)] = static_cast<Point>(index((i + 1) % (2 * m), 0));
        a_img[index(i, 1)] = static_cast<Point>(index((i + 2 * m - 1) % (2 * m), 1));
        b_img[index(i, 0)] = static_cast<Point>(index(i, 1));
        b_img[index(i, 1)] = static_cast<Point>(index((i + m) % (2 * m), 0));
    }
    PermGroup Q = PermGroup::closure(n, {Permutation(std::move(a_img)), Permutation(std::move(b_img))});
    require(Q.order() == n, ErrorCode::ConsistencyViolation, "generalized quaternion order");
    std::size_t involutions = 0;
    for (const auto& g : Q.elements())
        if (g.is_involution()) ++involutions;
    require(involutions == 1, ErrorCode::ConsistencyViolation,
            "generalized quaternion must have a unique involution");
    return Q;
}

namespace detail {

/// Linear group on the eight nonzero vectors of GF(3)^2; vectors are indexed
/// lexicographically. special = true keeps determinant 1.
inline PermGroup linear_group_gf3(bool special) {
    std::vector<std::array<int, 2>> vectors;
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            if (u || v) vectors.push_back({u, v});
    auto point_of = [&](int u, int v) -> Point {
        for (std::size_t i = 0; i < vectors.size(); ++i)
            if (vectors[i][0] == u && vectors[i][1] == v) return static_cast<Point>(i);
        raise(ErrorCode::ConsistencyViolation, "vector lookup");
    };
    auto matrix_perm = [&](int a, int b, int c, int d) {
        std::vector<Point> img(vectors.size());
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            int u = vectors[i][0], v = vectors[i][1];
            img[i] = point_of(((a * u + b * v) % 3 + 3) % 3, ((c * u + d * v) % 3 + 3) % 3);
        }
        return Permutation(std::move(img));
    };
    std::vector<Permutation> gens = {matrix_perm(0, -1, 1, 0), matrix_perm(1, 1, 0, 1)};
    if (!special) gens.push_back(matrix_perm(1, 0, 0, -1));
    PermGroup L = PermGroup::closure(8, std::move(gens));
    require(L.order() == (special ? 24u : 48u), ErrorCode::ConsistencyViolation,
            "linear group order over GF(3)");
    return L;
}

inline bool parse_sized_name(const std::string& text, const std::string& prefix, long& value) {
    if (text.size() <= prefix.size() || text.compare(0, prefix.size(), prefix) != 0) return false;
    for (std::size_t i = prefix.size(); i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = std::stol(text.substr(prefix.size()));
    return true;
}

} // namespace detail

inline PermGroup special_linear_2_3() { return detail::linear_group_gf3(true); }
inline PermGroup general_linear_2_3() { return detail::linear_group_gf3(false); }

/// "[(1 2 3),(4 5)]" -> the two permutations; a bare cycle string is a single
/// permutation. Points must fit in [1, degree].
inline std::vector<Permutation> parse_generator_list(const std::string& text, std::size_t degree) {
    std::string body = text;
    auto first = body.find_first_not_of(" \t");
    auto last = body.find_last_not_of(" \t");
    require(first != std::string::npos, ErrorCode::ParseError, "empty generator list");
    body = body.substr(first, last - first + 1);
    if (body.front() == '[') {
        require(body.back() == ']', ErrorCode::ParseError, "unterminated generator list");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char ch : body) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    if (!current.empty()) parts.push_back(current);
    std::vector<Permutation> out;
    for (const auto& part : parts) {
        auto begin = part.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        out.push_back(Permutation::parse(part, degree));
    }
    require(!out.empty(), ErrorCode::ParseError, "no generators in \"" + text + "\"");
    return out;
}

inline std::size_t generator_list_max_point(const std::string& text) {
    return Permutation::max_point(text);
}

/// Named presets and raw generator lists, realized at the requested degree
/// (0 means the preset's natural degree). Presets embed naturally: Sym(m) and
/// Alt(m) act on the first m points, C<n> is an n-cycle, D<2n> acts on the
/// first n points.
inline PermGroup parse_group(const std::string& text, std::size_t degree = 0) {
    std::string s = text;
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    require(first != std::string::npos, ErrorCode::ParseError, "empty group spec");
    s = s.substr(first, last - first + 1);

    if (s.front() == '[' || s.front() == '(') {
        std::size_t inferred = generator_list_max_point(s);
        std::size_t target = degree ? degree : inferred;
        require(inferred <= target, ErrorCode::ParseError,
                "generator list mentions point " + std::to_string(inferred) +
                    " beyond degree " + std::to_string(target));
        require(target >= 1, ErrorCode::ParseError, "cannot infer a degree from \"" + s + "\"");
        return PermGroup::closure(target, parse_generator_list(s, target));
    }

    auto embed = [&](std::size_t natural, auto&& make) {
        std::size_t target = degree ? degree : natural;
        require(natural <= target, ErrorCode::ParseError,
                s + " needs degree >= " + std::to_string(natural));
        return make(target);
    };

    long k = 0;
    if (s == "Q8") return generalized_quaternion(2);
    if (s == "Q16") return generalized_quaternion(4);
    if (s == "SL(2,3)") return special_linear_2_3();
    if (s == "GL(2,3)") return general_linear_2_3();
    if (detail::parse_sized_name(s, "S", k)) {
        require(k >= 1, ErrorCode::ParseError, "S<n> needs n >= 1");
        return embed(static_cast<std::size_t>(k), [&](std::size_t target) {
            std::vector<Permutation> gens;
            if (k >= 2) gens.push_back(Permutation::transposition(target, 0, 1));
            if (k >= 3) {
                std::vector<Point> cycle(static_cast<std::size_t>(k));
                std::iota(cycle.begin(), cycle.end(), Point{0});
                gens.push_back(Permutation::from_cycle(target, cycle));
            }
            return PermGroup::closure(target, std::move(gens));
        });
    }
    if (detail::parse_sized_name(s, "A", k)) {
        require(k >= 1, ErrorCode::ParseError, "A<n> needs n >= 1");
        return embed(static_cast<std::size_t>(k), [&](std::size_t target) {
            std::vector<Permutation> gens;
            if (k >= 3) gens.push_back(Permutation::from_cycle(target, {0, 1, 2}));
            if (k >= 4) {
                std::vector<Point> cycle;
                if (k % 2 == 1) {
                    cycle.resize(static_cast<std::size_t>(k));
                    std::iota(cycle.begin(), cycle.end(), Point{0});
                } else {
                    cycle.resize(static_cast<std::size_t>(k) - 1);
                    std::iota(cycle.begin(), cycle.end(), Point{1});
                }
                gens.push_back(Permutation::from_cycle(target, cycle));
            }
            return PermGroup::closure(target, std::move(gens));
        });
    }
    if (detail::parse_sized_name(s, "D", k)) {
        require(k >= 2 && k % 2 == 0, ErrorCode::ParseError, "D<2n> names the dihedral group of order 2n");
        long ngon = k / 2;
        return embed(static_cast<std::size_t>(ngon), [&](std::size_t target) {
            std::vector<Point> rot(static_cast<std::size_t>(ngon));
            std::iota(rot.begin(), rot.end(), Point{0});
            std::vector<Point> refl(target);
            std::iota(refl.begin(), refl.end(), Point{0});
            for (long i = 0; i < ngon; ++i) refl[static_cast<std::size_t>(i)] =
                static_cast<Point>((ngon - i) % ngon);
            return PermGroup::closure(target,
                                      {Permutation::from_cycle(target, rot), Permutation(std::move(refl))});
        });
    }
    if (detail::parse_sized_name(s, "C", k)) {
        require(k >= 1, ErrorCode::ParseError, "C<n> needs n >= 1");
        return embed(static_cast<std::size_t>(k), [&](std::size_t target) {
            std::vector<Point> cycle(static_cast<std::size_t>(k));
            std::iota(cycle.begin(), cycle.end(), Point{0});
            return PermGroup::closure(target, {Permutation::from_cycle(target, cycle)});
        });
    }
    raise(ErrorCode::ParseError, "unrecognized group spec \"" + s + "\"");
}

/// "family:p1,p2,..." -> the corresponding triple.
inline TripleSpec parse_family(const std::string& text) {
    auto colon = text.find(':');
    require(colon != std::string::npos, ErrorCode::ParseError,
            "family spec must look like name:params");
    std::string name = text.substr(0, colon);
    std::vector<long> params;
    std::string rest = text.substr(colon + 1);
    std::string current;
    for (char ch : rest) {
        if (ch == ',') {
            params.push_back(std::stol(current));
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            current += ch;
        }
    }
    if (!current.empty()) params.push_back(std::stol(current));

    auto arity = [&](std::size_t want) {
        require(params.size() == want, ErrorCode::ParseError,
                name + " takes " + std::to_string(want) + " parameter(s)");
    };
    if (name == "dihedral") {
        arity(1);
        return build_dihedral(params[0]);
    }
    if (name == "fieldc2") {
        arity(1);
        return build_field_c2(params[0]);
    }
    if (name == "agammal") {
        arity(2);
        return build_field_agammal(params[0], params[1]);
    }
    if (name == "symchain") {
        arity(3);
        return build_sym_chain(params[0], params[1], params[2]);
    }
    if (name == "intransitive") {
        arity(2);
        return build_intransitive(params[0], params[1]);
    }
    if (name == "affine") {
        arity(1);
        return build_affine(params[0]);
    }
    raise(ErrorCode::ParseError, "unrecognized family \"" + name + "\"");
}

} // namespace pcode
